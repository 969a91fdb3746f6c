"""Command line front end: one JSON document in, one deterministic report out.

Exit codes: 0 affirmative answer, 1 negative answer, 2 invalid input.
"""
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import click
import jsonschema
import numpy as np

from . import cochain, ext, leib2, rep, wells, xmod
from .exactla import is_zero, zeros
from .structure import ShapeError

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    def __init__(self, errors):
        super().__init__("; ".join("%s: %s" % e for e in errors))
        self.errors = errors


def _schema():
    text = resources.files("leibniz2").joinpath("schema/input.schema.json").read_text()
    return json.loads(text)


# scalars and tensors

def scalar_text(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def parse_scalar(s):
    return Fraction(s) if isinstance(s, str) else Fraction(int(s))


def tensor_json(a):
    a = np.asarray(a, dtype=object)
    if a.ndim == 0:
        return scalar_text(a.item())
    return [tensor_json(x) for x in a] if a.shape[0] else []


def _fill(obj, shape, path, out, idx):
    if not shape:
        if isinstance(obj, list):
            raise InputError([(path, "expected a scalar")])
        out[idx] = parse_scalar(obj)
        return
    if not isinstance(obj, list) or len(obj) != shape[0]:
        raise InputError([(path, "expected length %d along this axis" % shape[0])])
    for k, item in enumerate(obj):
        _fill(item, shape[1:], "%s[%d]" % (path, k), out, idx + (k,))


def parse_tensor(obj, shape, path):
    """Nested list -> Fraction array of the given shape; [] stands for any empty tensor."""
    out = zeros(*shape)
    if obj is None:
        return out
    if 0 in shape and obj == []:
        return out
    try:
        _fill(obj, tuple(shape), path, out, ())
    except InputError as e:
        where, msg = e.errors[0]
        raise InputError([(path, "shape %s expected; at %s: %s"
                           % (list(shape), where[len(path):] or "top", msg))])
    return out


# documents

@dataclass
class InputDocument:
    raw: dict
    algebra: object = None
    representation: object = None
    cocycle: object = None
    cocycles: object = None
    extension: object = None
    splitting: object = None
    crossed_module: object = None
    strict: bool = False


def _algebra(blk, path):
    n0, n1 = blk["dim0"], blk["dim1"]
    t = {k: parse_tensor(blk.get(k), s, "%s.%s" % (path, k)) for k, s in (
        ("d", (n0, n1)), ("b00", (n0, n0, n0)), ("b01", (n1, n0, n1)),
        ("b10", (n1, n1, n0)), ("l3", (n1, n0, n0, n0)))}
    return leib2.Leibniz2Algebra(**t)


def _representation(blk, g, path):
    if blk == "adjoint":
        return rep.adjoint_rep(g)
    v0, v1 = blk["V"]["dim0"], blk["V"]["dim1"]
    shapes = rep.rep_shapes(g.dim0, g.dim1, v0, v1)
    blocks = {"partial": parse_tensor(blk["V"].get("partial"), (v0, v1), path + ".V.partial")}
    for k, s in shapes.items():
        if k != "partial":
            blocks[k] = parse_tensor(blk.get(k), s, "%s.%s" % (path, k))
    return rep.Representation(**blocks)


def _cocycle(blk, g, rho, path):
    names = ["psi", "omega", "mu", "nu", "theta"]
    parts = [parse_tensor(blk.get(k), s, "%s.%s" % (path, k))
             for k, s in zip(names, cochain.shapes2(g, rho))]
    return cochain.Cochain2(*parts)


def _crossed_module(blk, path):
    n0, n1 = blk["p0_dim"], blk["p1_dim"]
    return xmod.CrossedModule(
        parse_tensor(blk.get("p0_bracket"), (n0, n0, n0), path + ".p0_bracket"), n1,
        parse_tensor(blk.get("left_action"), (n1, n0, n1), path + ".left_action"),
        parse_tensor(blk.get("right_action"), (n1, n1, n0), path + ".right_action"),
        parse_tensor(blk.get("f"), (n0, n1), path + ".f"))


def parse_input(data):
    """Bytes -> validated InputDocument; raises InputError with JSON paths."""
    try:
        raw = json.loads(data)
    except (ValueError, UnicodeDecodeError) as e:
        raise InputError([("$", "parse error: %s" % e)])
    validator = jsonschema.Draft202012Validator(_schema())
    errs = sorted(validator.iter_errors(raw), key=lambda e: (e.json_path, e.message))
    if errs:
        raise InputError([(e.json_path, e.message) for e in errs])
    doc = InputDocument(raw, strict=raw.get("options", {}).get("strict", False))
    if "crossed_module" in raw:
        doc.crossed_module = _crossed_module(raw["crossed_module"], "$.crossed_module")
        if "algebra" in raw:
            raise InputError([("$.algebra", "give either algebra or crossed_module")])
        doc.algebra = xmod.xmod_to_strict(doc.crossed_module)
    elif "algebra" in raw:
        doc.algebra = _algebra(raw["algebra"], "$.algebra")
    g = doc.algebra
    if "representation" in raw:
        if g is None:
            raise InputError([("$.representation", "needs an algebra")])
        doc.representation = _representation(raw["representation"], g, "$.representation")
    rho = doc.representation
    for key in ("cocycle", "cocycles"):
        if key in raw and rho is None:
            raise InputError([("$.%s" % key, "needs an algebra and a representation")])
    if "cocycle" in raw:
        doc.cocycle = _cocycle(raw["cocycle"], g, rho, "$.cocycle")
    if "cocycles" in raw:
        doc.cocycles = [_cocycle(c, g, rho, "$.cocycles[%d]" % k)
                        for k, c in enumerate(raw["cocycles"])]
    if "extension" in raw:
        if g is None:
            raise InputError([("$.extension", "needs the base algebra")])
        doc.extension = _extension(raw["extension"], g, "$.extension")
    if "splitting" in raw:
        if doc.extension is None:
            raise InputError([("$.splitting", "needs an extension")])
        h = doc.extension.hat
        doc.splitting = ext.Splitting(
            parse_tensor(raw["splitting"]["s0"], (h.dim0, g.dim0), "$.splitting.s0"),
            parse_tensor(raw["splitting"]["s1"], (h.dim1, g.dim1), "$.splitting.s1"))
    if "pair" in raw and g is None:
        raise InputError([("$.pair", "needs an algebra")])
    return doc


def _extension(blk, g, path):
    from .exactla import left_inverse, rank
    from .structure import GradedMap, TwoTermComplex, ein
    hat = _algebra(blk["hat"], path + ".hat")
    i0r, i1r = blk["i0"], blk["i1"]
    v0 = len(i0r[0]) if i0r and isinstance(i0r[0], list) else 0
    v1 = len(i1r[0]) if i1r and isinstance(i1r[0], list) else 0
    if hat.dim0 - g.dim0 != v0 or hat.dim1 - g.dim1 != v1:
        raise InputError([(path, "fibre dimensions must be dim(hat) - dim(base)")])
    i0 = parse_tensor(i0r, (hat.dim0, v0), path + ".i0")
    i1 = parse_tensor(i1r, (hat.dim1, v1), path + ".i1")
    p0 = parse_tensor(blk["p0"], (g.dim0, hat.dim0), path + ".p0")
    p1 = parse_tensor(blk["p1"], (g.dim1, hat.dim1), path + ".p1")
    if rank(i0) != v0 or rank(i1) != v1:
        raise InputError([(path, "inclusions are not injective")])
    partial = ein('ij,jk,kl->il', left_inverse(i0), hat.d, i1)
    E = ext.Extension(hat, g, TwoTermComplex(v1, v0, partial), GradedMap(i0, i1),
                      GradedMap(p0, p1))
    probs = ext.check_extension(E)
    if probs:
        raise InputError([(path, p) for p in probs])
    return E


def _pair_blocks(raw, g, rho, with_alpha2=True):
    p = raw["pair"]
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    out = [parse_tensor(p["beta0"], (v0, v0), "$.pair.beta0"),
           parse_tensor(p["beta1"], (v1, v1), "$.pair.beta1"),
           parse_tensor(p["alpha0"], (n0, n0), "$.pair.alpha0"),
           parse_tensor(p["alpha1"], (n1, n1), "$.pair.alpha1")]
    if with_alpha2:
        out.append(parse_tensor(p.get("alpha2"), (n1, n0, n0), "$.pair.alpha2"))
    elif p.get("alpha2") is not None:
        raise InputError([("$.pair.alpha2", "crossed-module pairs have no alpha2")])
    return out


# report serialization

def _jsonable(x):
    if isinstance(x, Fraction):
        return scalar_text(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if isinstance(x, np.ndarray):
        return tensor_json(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def emit_report(report, fmt="json"):
    data = _jsonable(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k in sorted(v):
                walk("%s.%s" % (prefix, k) if prefix else k, v[k])
        else:
            lines.append("%s: %s" % (prefix, json.dumps(v, sort_keys=True)))
    walk("", data)
    return "\n".join(lines) + "\n"


def algebra_json(g):
    return {"dim0": g.dim0, "dim1": g.dim1, "d": g.d, "b00": g.b00, "b01": g.b01,
            "b10": g.b10, "l3": g.l3}


def rep_json(rho):
    out = {k: v for k, v in rho.blocks().items() if k != "partial"}
    out["V"] = {"dim0": rho.dimV0, "dim1": rho.dimV1, "partial": rho.partial}
    return out


def cocycle_json(c):
    return {"psi": c.psi, "omega": c.omega, "mu": c.mu, "nu": c.nu, "theta": c.theta}


def cochain1_json(lam):
    return {"phi0": lam.phi0, "phi1": lam.phi1, "chi": lam.chi}


def extension_json(E):
    return {"hat": algebra_json(E.hat), "i0": E.i.m0, "i1": E.i.m1, "p0": E.p.m0,
            "p1": E.p.m1}


def xmod_json(x):
    return {"p0_dim": x.dim0, "p1_dim": x.dim1, "p0_bracket": x.bracket,
            "left_action": x.left, "right_action": x.right, "f": x.f}


def _violations(vs):
    return [v.as_dict() for v in vs]


def emit_document(doc):
    """Canonical JSON text of an input document."""
    return json.dumps(_jsonable(canonical_document(doc)), sort_keys=True, indent=2) + "\n"


def canonical_document(doc):
    out = {"schema_version": "1"}
    if doc.crossed_module is not None:
        out["crossed_module"] = xmod_json(doc.crossed_module)
    elif doc.algebra is not None:
        out["algebra"] = algebra_json(doc.algebra)
    if doc.representation is not None:
        out["representation"] = rep_json(doc.representation)
    if doc.cocycle is not None:
        out["cocycle"] = cocycle_json(doc.cocycle)
    if doc.cocycles is not None:
        out["cocycles"] = [cocycle_json(c) for c in doc.cocycles]
    if doc.extension is not None:
        out["extension"] = extension_json(doc.extension)
    if doc.splitting is not None:
        out["splitting"] = {"s0": doc.splitting.s0, "s1": doc.splitting.s1}
    if "pair" in doc.raw:
        p = doc.raw["pair"]
        out["pair"] = {k: _canon_raw(v) for k, v in p.items()}
    if "options" in doc.raw:
        out["options"] = dict(doc.raw["options"])
    return out


def _canon_raw(v):
    if isinstance(v, list):
        return [_canon_raw(x) for x in v]
    return scalar_text(parse_scalar(v))


# commands

def _need(doc, *keys):
    missing = [k for k in keys if getattr(doc, k, None) is None and k not in doc.raw]
    if missing:
        raise InputError([("$.%s" % k, "required by this command") for k in missing])


def _setting(doc):
    """(extension, splitting) from an extension block or from representation + cocycle."""
    if doc.extension is not None:
        E = doc.extension
        s = doc.splitting or ext.find_splitting(E)
        return E, s
    _need(doc, "algebra", "representation", "cocycle")
    g, rho = doc.algebra, doc.representation
    _check_rep(g, rho)
    ok, _ = cochain.is_cocycle2(doc.cocycle, g, rho)
    if not ok:
        raise InputError([("$.cocycle", "not a 2-cocycle")])
    return ext.build_extension(g, rho, doc.cocycle)


def _check_rep(g, rho):
    if leib2.verify_algebra(g):
        raise InputError([("$.algebra", "fails the Leibniz 2-algebra axioms")])
    if rep.verify_representation(rho, g):
        raise InputError([("$.representation", "not a representation of the algebra")])


def cmd_verify(doc):
    _need(doc, "algebra")
    g = doc.algebra
    out = {"algebra": _violations(leib2.verify_algebra(g)), "strict": leib2.is_strict(g)}
    ok = not out["algebra"]
    if doc.crossed_module is not None:
        out["crossed_module"] = _violations(xmod.verify_xmod(doc.crossed_module))
        ok = ok and not out["crossed_module"]
    if doc.representation is not None:
        out["representation"] = _violations(rep.verify_representation(doc.representation, g))
        ok = ok and not out["representation"]
    if doc.cocycle is not None and ok:
        good, res = cochain.is_cocycle2(doc.cocycle, g, doc.representation)
        out["cocycle"] = {"is_cocycle": good,
                          "residual": None if good else res.flat()}
        ok = ok and good
    return out, ok


def cmd_cohomology(doc):
    _need(doc, "algebra", "representation")
    g, rho = doc.algebra, doc.representation
    _check_rep(g, rho)
    s = cochain.Cohomology(g, rho, doc.strict).summary()
    return {"dims": {"C1": s.dimC1, "C2": s.dimC2, "Z1": s.dimZ1, "Z2": s.dimZ2,
                     "B2": s.dimB2, "H2": s.dimH2},
            "z1_basis": s.z1_basis, "z2_basis": s.z2_basis, "b2_basis": s.b2_basis,
            "h2_representatives": s.h2_representatives, "strict": doc.strict}, True


def cmd_extend(doc):
    _need(doc, "algebra", "representation", "cocycle")
    g, rho = doc.algebra, doc.representation
    _check_rep(g, rho)
    ok, res = cochain.is_cocycle2(doc.cocycle, g, rho)
    if not ok:
        return {"is_cocycle": False, "residual": res.flat()}, False
    E, s = ext.build_extension(g, rho, doc.cocycle)
    return {"is_cocycle": True, "extension": extension_json(E),
            "splitting": {"s0": s.s0, "s1": s.s1}}, True


def cmd_extract(doc):
    _need(doc, "algebra", "extension")
    E, s = _setting(doc)
    try:
        rho = ext.induced_rep(E, s)
        c = ext.extract_cocycle(E, s)
    except ext.FiberEscape as e:
        raise InputError([("$.splitting", str(e))])
    return {"representation": rep_json(rho), "cocycle": cocycle_json(c),
            "splitting": {"s0": s.s0, "s1": s.s1}}, True


def cmd_equiv(doc):
    _need(doc, "algebra", "representation", "cocycles")
    g, rho = doc.algebra, doc.representation
    _check_rep(g, rho)
    for k, c in enumerate(doc.cocycles):
        if not cochain.is_cocycle2(c, g, rho)[0]:
            raise InputError([("$.cocycles[%d]" % k, "not a 2-cocycle")])
    E1, _ = ext.build_extension(g, rho, doc.cocycles[0])
    E2, _ = ext.build_extension(g, rho, doc.cocycles[1])
    F = ext.extensions_equivalent(E1, E2)
    if F is None:
        return {"equivalent": False}, False
    return {"equivalent": True, "witness": {"F0": F.F0, "F1": F.F1, "F2": F.F2}}, True


def _report(r, kind):
    out = {"compatible": r.compatible, "violations": _violations(r.violations)}
    if r.compatible:
        out["obstruction_class"] = r.obstruction_class
        out["inducible"] = r.inducible
        if r.inducible:
            out["witness"] = cochain1_json(r.witness)
            M = r.induced
            if kind == "aut":
                out["induced"] = {"F0": M.F0, "F1": M.F1, "F2": M.F2}
            else:
                out["induced"] = {"D0": M.D0, "D1": M.D1, "D2": M.D2}
    return out, bool(r.compatible and r.inducible)


def _aut_pair(doc, E):
    _need(doc, "pair")
    b0, b1, a0, a1, a2 = _pair_blocks(doc.raw, E.base, _fiber_dims(E))
    try:
        return wells.aut_pair(E.base, E.fiber.d, b0, b1, a0, a1, a2)
    except wells.InvalidPair as e:
        raise InputError([("$.pair", str(e))])


def _der_pair(doc, E):
    _need(doc, "pair")
    b0, b1, a0, a1, a2 = _pair_blocks(doc.raw, E.base, _fiber_dims(E))
    try:
        return wells.der_pair(E.base, E.fiber.d, b0, b1, a0, a1, a2)
    except wells.InvalidPair as e:
        raise InputError([("$.pair", str(e))])


@dataclass
class _Dims:
    dimV0: int
    dimV1: int


def _fiber_dims(E):
    return _Dims(E.fiber.dim0, E.fiber.dim1)


def cmd_induce_aut(doc):
    E, s = _setting(doc)
    return _report(wells.aut_induce(_aut_pair(doc, E), E, s, doc.strict), "aut")


def cmd_induce_der(doc):
    E, s = _setting(doc)
    return _report(wells.der_induce(_der_pair(doc, E), E, s, doc.strict), "der")


def _class(fn, P, E, s, strict):
    try:
        c = fn(P, E, s, strict)
    except wells.IncompatiblePair as e:
        return {"compatible": False, "message": str(e)}, False
    return {"compatible": True, "class": c, "zero": is_zero(c)}, is_zero(c)


def cmd_wells_aut(doc):
    E, s = _setting(doc)
    return _class(wells.wells_aut, _aut_pair(doc, E), E, s, doc.strict)


def cmd_wells_der(doc):
    E, s = _setting(doc)
    return _class(wells.wells_der, _der_pair(doc, E), E, s, doc.strict)


# crossed modules

def _need_xmod(doc):
    if doc.crossed_module is None:
        raise InputError([("$.crossed_module", "required by this command")])
    return doc.crossed_module


def _xmod_rep(doc, x):
    _need(doc, "representation")
    rho = doc.representation
    if xmod.verify_xmod(x):
        raise InputError([("$.crossed_module", "not a crossed module")])
    if xmod.verify_xmod_rep(rho, x):
        raise InputError([("$.representation", "not a representation of the crossed module")])
    return rho


def _xmod_setting(doc):
    x = _need_xmod(doc)
    rho = _xmod_rep(doc, x)
    _need(doc, "cocycle")
    c = doc.cocycle
    if not is_zero(c.theta):
        raise InputError([("$.cocycle.theta", "crossed-module cocycles have no theta")])
    if not cochain.is_cocycle2(c, doc.algebra, rho)[0]:
        raise InputError([("$.cocycle", "not a 2-cocycle")])
    E, s = xmod.xmod_extension(x, rho, c)
    return x, rho, E, s


def _xpair(doc, x, rho, der):
    _need(doc, "pair")
    b0, b1, a0, a1 = _pair_blocks(doc.raw, doc.algebra, rho, with_alpha2=False)
    make = xmod.xmod_der_pair if der else xmod.xmod_aut_pair
    try:
        return make(x, rho.partial, b0, b1, a0, a1)
    except wells.InvalidPair as e:
        raise InputError([("$.pair", str(e))])


def cmd_xmod_verify(doc):
    x = _need_xmod(doc)
    out = {"crossed_module": _violations(xmod.verify_xmod(x))}
    ok = not out["crossed_module"]
    if doc.representation is not None:
        out["representation"] = _violations(xmod.verify_xmod_rep(doc.representation, x))
        ok = ok and not out["representation"]
    return out, ok


def cmd_xmod_semidirect(doc):
    x = _need_xmod(doc)
    rho = _xmod_rep(doc, x)
    y = xmod.xmod_semidirect(x, rho)
    return {"crossed_module": xmod_json(y), "violations": _violations(xmod.verify_xmod(y))}, True


def cmd_xmod_induce_aut(doc):
    x, rho, E, s = _xmod_setting(doc)
    return _report(xmod.xmod_aut_induce(_xpair(doc, x, rho, False), E, s), "aut")


def cmd_xmod_induce_der(doc):
    x, rho, E, s = _xmod_setting(doc)
    return _report(xmod.xmod_der_induce(_xpair(doc, x, rho, True), E, s), "der")


def _xclass(fn, P, E, s):
    try:
        c = fn(P, E, s)
    except wells.IncompatiblePair as e:
        return {"compatible": False, "message": str(e)}, False
    return {"compatible": True, "class": c, "zero": is_zero(c)}, is_zero(c)


def cmd_xmod_wells_aut(doc):
    x, rho, E, s = _xmod_setting(doc)
    return _xclass(xmod.xmod_wells, _xpair(doc, x, rho, False), E, s)


def cmd_xmod_wells_der(doc):
    x, rho, E, s = _xmod_setting(doc)
    return _xclass(xmod.xmod_wells_der, _xpair(doc, x, rho, True), E, s)


COMMANDS = {
    "verify": cmd_verify,
    "cohomology": cmd_cohomology,
    "extend": cmd_extend,
    "extract": cmd_extract,
    "equiv": cmd_equiv,
    "induce-aut": cmd_induce_aut,
    "induce-der": cmd_induce_der,
    "wells-aut": cmd_wells_aut,
    "wells-der": cmd_wells_der,
    "xmod-verify": cmd_xmod_verify,
    "xmod-semidirect": cmd_xmod_semidirect,
    "xmod-induce-aut": cmd_xmod_induce_aut,
    "xmod-induce-der": cmd_xmod_induce_der,
    "xmod-wells-aut": cmd_xmod_wells_aut,
    "xmod-wells-der": cmd_xmod_wells_der,
}


def execute(command, data):
    """Run one command on raw input bytes; returns (report dict, exit code)."""
    if command not in COMMANDS:
        return {"command": command, "status": "input_error",
                "errors": [{"path": "$", "message": "unknown command"}]}, INPUT_ERROR
    try:
        doc = parse_input(data)
        body, ok = COMMANDS[command](doc)
    except InputError as e:
        return {"command": command, "status": "input_error",
                "errors": [{"path": p, "message": m} for p, m in e.errors]}, INPUT_ERROR
    except ShapeError as e:
        return {"command": command, "status": "input_error",
                "errors": [{"path": "$", "message": str(e)}]}, INPUT_ERROR
    report = {"command": command, "status": "ok" if ok else "negative", "result": body}
    return report, OK if ok else NEGATIVE


def _run(command, input_path, output_path, fmt):
    try:
        with open(input_path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        report, code = {"command": command, "status": "input_error",
                        "errors": [{"path": "$", "message": str(e)}]}, INPUT_ERROR
    else:
        report, code = execute(command, data)
    text = emit_report(report, fmt)
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


@click.group(help="Exact computations for Leibniz 2-algebras.")
def main():
    pass


def _make(name):
    @click.command(name=name, help="Run the %s command on a JSON document." % name)
    @click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
    @click.option("--output", "output_path", default=None, type=click.Path(dir_okay=False))
    @click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
    def command(input_path, output_path, fmt):
        sys.exit(_run(name, input_path, output_path, fmt))
    return command


for _name in COMMANDS:
    main.add_command(_make(_name))


if __name__ == "__main__":
    main()
