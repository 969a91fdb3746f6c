"""Regenerate the shipped CLI corpus under src/leibniz2/corpus."""
import json
import os

from leibniz2 import cli
from leibniz2.cochain import cochain, d1, zero_cochain
from leibniz2.ext import build_extension
from leibniz2.fixtures import fix_a, fix_b, fix_b_prime, fix_c, hemi3, skeletal
from leibniz2.rep import adjoint_rep, trivial_rep

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "leibniz2", "corpus")
manifest = {}


def doc(**blocks):
    out = {"schema_version": "1"}
    out.update(blocks)
    return cli._jsonable(out)


def put(name, command, expect, body):
    fn = "%s__%s.json" % (command, name)
    with open(os.path.join(OUT, fn), "w") as fh:
        if isinstance(body, str):
            fh.write(body)
        else:
            fh.write(json.dumps(body, sort_keys=True, indent=2) + "\n")
    manifest[fn] = {"command": command, "exit": expect}


A = cli.algebra_json
R = cli.rep_json
C = cli.cocycle_json

for name, f in [("fix_a", fix_a), ("fix_b", fix_b), ("fix_c", fix_c), ("hemi3", hemi3),
                ("skeletal", skeletal)]:
    put(name, "verify", 0, doc(algebra=A(f()), representation="adjoint"))
put("fix_b_prime", "verify", 1, doc(algebra=A(fix_b_prime())))

g = fix_a()
tr = trivial_rep(g, 1, 1)
put("fix_a_trivial", "cohomology", 0, doc(algebra=A(g), representation=R(tr)))
put("fix_b_adjoint", "cohomology", 0, doc(algebra=A(fix_b()), representation="adjoint"))
put("hemi3_adjoint", "cohomology", 0, doc(algebra=A(hemi3()), representation="adjoint"))

psi = cochain(g, tr, 2, psi=[[1]])
put("fix_a_psi", "extend", 0, doc(algebra=A(g), representation=R(tr), cocycle=C(psi)))
gb = fix_b()
bad = cochain(gb, adjoint_rep(gb), 2, omega=[[[1, 0], [0, 0]], [[0, 0], [0, 0]]])
put("fix_b_not_cocycle", "extend", 1,
    doc(algebra=A(gb), representation="adjoint", cocycle=C(bad)))

gc = fix_c()
trc = trivial_rep(gc, 1, 1)
cc = cochain(gc, trc, 2, mu=[[[1]]], nu=[[[1]]])
E, s = build_extension(gc, trc, cc)
put("fix_c_mu_nu", "extract", 0, doc(algebra=A(gc), extension=cli.extension_json(E)))

put("fix_a_psi_vs_zero", "equiv", 1, doc(
    algebra=A(g), representation=R(tr), cocycles=[C(psi), C(zero_cochain(g, tr, 2))]))
cob = d1(gc, trc, cochain(gc, trc, 1, phi0=[[2]], phi1=[[-1]], chi=[[[3]]]))
put("fix_c_coboundary", "equiv", 0, doc(
    algebra=A(gc), representation=R(trc), cocycles=[C(cc), C(cc + cob)]))

base = dict(algebra=A(g), representation=R(tr), cocycle=C(psi))
scal = {"beta0": [["2"]], "beta1": [["2"]], "alpha0": [["1"]], "alpha1": [["1"]]}
scal2 = {"beta0": [["2"]], "beta1": [["2"]], "alpha0": [["1"]], "alpha1": [["2"]]}
der1 = {"beta0": [["1"]], "beta1": [["1"]], "alpha0": [["0"]], "alpha1": [["0"]]}
der2 = {"beta0": [["1"]], "beta1": [["1"]], "alpha0": [["0"]], "alpha1": [["1"]]}
put("fix_a_scaling", "induce-aut", 1, doc(pair=scal, **base))
put("fix_a_scaling_alpha1", "induce-aut", 0, doc(pair=scal2, **base))
put("fix_a_singular_pair", "induce-aut", 2,
    doc(pair=dict(scal, alpha0=[["0"]]), **base))
put("fix_a_beta", "induce-der", 1, doc(pair=der1, **base))
put("fix_a_beta_alpha1", "induce-der", 0, doc(pair=der2, **base))
put("fix_a_scaling", "wells-aut", 1, doc(pair=scal, **base))
put("fix_a_scaling_alpha1", "wells-aut", 0, doc(pair=scal2, **base))
put("fix_a_beta", "wells-der", 1, doc(pair=der1, **base))
put("fix_a_beta_alpha1", "wells-der", 0, doc(pair=der2, **base))

xm = {"p0_dim": 1, "p1_dim": 1, "f": [["1"]]}
xa = {"p0_dim": 1, "p1_dim": 1}
trv = {"V": {"dim0": 1, "dim1": 1}}
xc = {"psi": [["1"]]}
put("id_map", "xmod-verify", 0, doc(crossed_module=xm))
bad_x = {"p0_dim": 1, "p1_dim": 1, "f": [["1"]], "left_action": [[["1"]]]}
put("bad_equivariance", "xmod-verify", 1, doc(crossed_module=bad_x))
put("id_map_trivial", "xmod-semidirect", 0, doc(crossed_module=xm, representation=trv))
xbase = dict(crossed_module=xa, representation=trv, cocycle=xc)
put("psi_scaling", "xmod-induce-aut", 1, doc(pair=scal, **xbase))
put("psi_scaling_alpha1", "xmod-induce-aut", 0, doc(pair=scal2, **xbase))
put("psi_beta", "xmod-induce-der", 1, doc(pair=der1, **xbase))
put("psi_beta_alpha1", "xmod-induce-der", 0, doc(pair=der2, **xbase))
put("psi_scaling", "xmod-wells-aut", 1, doc(pair=scal, **xbase))
put("psi_beta", "xmod-wells-der", 1, doc(pair=der1, **xbase))

# malformed inputs
put("bad_shape", "verify", 2, doc(algebra={"dim0": 1, "dim1": 1, "d": [["1", "2"]]}))
put("no_version", "verify", 2, {"algebra": {"dim0": 1, "dim1": 0}})
put("unknown_field", "verify", 2, {"schema_version": "1", "algebra": {"dim0": 1, "dim1": 0},
                                   "extra": 1})
put("not_json", "cohomology", 2, "{not json\n")

with open(os.path.join(OUT, "MANIFEST.json"), "w") as fh:
    fh.write(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
