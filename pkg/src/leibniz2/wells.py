"""Inducibility of automorphism and derivation pairs, and the Wells map.

Every solver works in block coordinates of the extension with respect
to the given splitting: degree 0 is g0 + V0 and degree 1 is g1 + V1.
Maps built there are rewritten in the extension's own coordinates
before they are returned.
"""
from dataclasses import dataclass, field

import numpy as np

from .cochain import (Cochain2, Cohomology, d1_matrix, dim_cochains, is_1cocycle,
                      unflatten, zero_cochain)
from .exactla import eye, inverse, is_invertible, is_zero, left_inverse, zeros
from .ext import (Extension, block_to_hat, build_extension, extract_cocycle, frame, memo, split_key,
                  induced_rep, unipotent_block, _block)
from .leib2 import (Derivation2, Hom2, collect, compose_hom, hom, transport, verify_derivation,
                    verify_hom)
from .structure import ShapeError, batched, ein, unit_batch


class InvalidPair(ValueError):
    pass


class IncompatiblePair(ValueError):
    pass


class FiberNotPreserved(ValueError):
    pass


class NotOneCocycle(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AutPair:
    beta0: np.ndarray
    beta1: np.ndarray
    alpha: Hom2

    def __eq__(self, other):
        return (isinstance(other, AutPair) and bool(np.all(self.beta0 == other.beta0))
                and bool(np.all(self.beta1 == other.beta1)) and self.alpha == other.alpha)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class DerPair:
    beta0: np.ndarray
    beta1: np.ndarray
    alpha: Derivation2

    def __eq__(self, other):
        return (isinstance(other, DerPair) and bool(np.all(self.beta0 == other.beta0))
                and bool(np.all(self.beta1 == other.beta1)) and self.alpha == other.alpha)

    __hash__ = None


@dataclass(frozen=True)
class WellsReport:
    compatible: bool
    violations: list = field(default_factory=list)
    obstruction_class: object = None
    witness: object = None
    induced: object = None

    @property
    def inducible(self):
        return self.witness is not None


def _mats(beta0, beta1, g, partial):
    from .leib2 import _arr
    b0, b1 = _arr(beta0), _arr(beta1)
    v0, v1 = partial.shape
    if b0.shape != (v0, v0) or b1.shape != (v1, v1):
        raise ShapeError("beta blocks do not match the fibre")
    if not is_zero(ein('ij,jk->ik', b0, partial) - ein('ij,jk->ik', partial, b1)):
        raise InvalidPair("beta does not commute with the fibre differential")
    return b0, b1


def aut_pair(g, partial, beta0, beta1, alpha0, alpha1, alpha2=None):
    """Validated automorphism pair; rejects non-invertible or non-homomorphic input."""
    b0, b1 = _mats(beta0, beta1, g, partial)
    alpha = hom(alpha0, alpha1, alpha2)
    if not (is_invertible(b0) and is_invertible(b1)):
        raise InvalidPair("beta is not invertible")
    if alpha.F0.shape != (g.dim0, g.dim0) or alpha.F1.shape != (g.dim1, g.dim1):
        raise ShapeError("alpha blocks do not match the algebra")
    if not (is_invertible(alpha.F0) and is_invertible(alpha.F1)):
        raise InvalidPair("alpha is not invertible")
    if verify_hom(alpha, g, g):
        raise InvalidPair("alpha is not a homomorphism")
    return AutPair(b0, b1, alpha)


def der_pair(g, partial, beta0, beta1, alpha0, alpha1, alpha2=None):
    from .leib2 import derivation
    b0, b1 = _mats(beta0, beta1, g, partial)
    alpha = derivation(alpha0, alpha1, alpha2)
    if alpha.D0.shape != (g.dim0, g.dim0) or alpha.D1.shape != (g.dim1, g.dim1):
        raise ShapeError("alpha blocks do not match the algebra")
    if verify_derivation(alpha, g):
        raise InvalidPair("alpha is not a derivation")
    return DerPair(b0, b1, alpha)


def identity_pair(g, rho):
    return AutPair(eye(rho.dimV0), eye(rho.dimV1),
                   Hom2(eye(g.dim0), eye(g.dim1), zeros(g.dim1, g.dim0, g.dim0)))


def zero_pair(g, rho):
    return DerPair(zeros(rho.dimV0, rho.dimV0), zeros(rho.dimV1, rho.dimV1),
                   Derivation2(zeros(g.dim0, g.dim0), zeros(g.dim1, g.dim1),
                               zeros(g.dim1, g.dim0, g.dim0)))


def compose_pairs(P, Q):
    """(P.beta Q.beta, P.alpha after Q.alpha)."""
    return AutPair(ein('ij,jk->ik', P.beta0, Q.beta0), ein('ij,jk->ik', P.beta1, Q.beta1),
                   compose_hom(P.alpha, Q.alpha))


# compatibility

def aut_conditions(pair, rho):
    B0, B1 = pair.beta0, pair.beta1
    C0, C1 = inverse(B0), inverse(B1)
    A0, A1, A2 = pair.alpha.F0, pair.alpha.F1, pair.alpha.F2

    def conj(t, out, inn):
        return ein('oi,ixj,jv->oxv', out, t, inn)

    def moved(t, A):
        return ein('oyv,yx->oxv', t, A)

    def two(t):
        return ein('oijv,ix,jy->oxyv', t, A0, A0)

    def conj2(t):
        return ein('oi,ixyj,jv->oxyv', B1, t, C0)

    def via(t):
        return ein('oav,axy->oxyv', t, A2)

    return [
        ("COC6", conj(rho.l0_0, B0, C0) - moved(rho.l0_0, A0)),
        ("COC7", conj(rho.r0_0, B0, C0) - moved(rho.r0_0, A0)),
        ("COC8", conj(rho.l0_1, B1, C1) - moved(rho.l0_1, A0)),
        ("COC9", conj(rho.r0_1, B1, C1) - moved(rho.r0_1, A0)),
        ("COC10", conj(rho.r1, B1, C0) - moved(rho.r1, A1)),
        ("COC11", conj(rho.l1, B1, C0) - moved(rho.l1, A1)),
        ("COC12", two(rho.l2) + via(rho.l1) - conj2(rho.l2)),
        ("COC13", two(rho.r2) - via(rho.r1) - conj2(rho.r2)),
        ("COC14", two(rho.m2) + via(rho.r1) - conj2(rho.m2)),
    ]


def aut_compatible(pair, rho):
    """(ok, violations) for the conjugation identities."""
    v = collect(aut_conditions(pair, rho))
    return not v, v


def der_conditions(pair, rho):
    B0, B1 = pair.beta0, pair.beta1
    A0, A1, A2 = pair.alpha.D0, pair.alpha.D1, pair.alpha.D2

    def rule(t, out, inn, A):
        return (ein('oi,ixv->oxv', out, t) - ein('oyv,yx->oxv', t, A)
                - ein('oxj,jv->oxv', t, inn))

    def rule2(t):
        return (ein('oiyv,ix->oxyv', t, A0) + ein('oxjv,jy->oxyv', t, A0)
                + ein('oxyj,jv->oxyv', t, B0) - ein('oi,ixyv->oxyv', B1, t))

    def via(t):
        return ein('oav,axy->oxyv', t, A2)

    return [
        ("COCY6", rule(rho.l0_0, B0, B0, A0)),
        ("COCY7", rule(rho.r0_0, B0, B0, A0)),
        ("COCY8", rule(rho.l0_1, B1, B1, A0)),
        ("COCY9", rule(rho.r0_1, B1, B1, A0)),
        ("COCY10", rule(rho.l1, B1, B0, A1)),
        ("COCY11", rule(rho.r1, B1, B0, A1)),
        ("COCY12", rule2(rho.l2) + via(rho.l1)),
        ("COCY13", rule2(rho.r2) - via(rho.r1)),
        ("COCY14", rule2(rho.m2) + via(rho.r1)),
    ]


def der_compatible(pair, rho):
    v = collect(der_conditions(pair, rho))
    return not v, v


# the linear systems

def coc_system(pair, g, rho, c):
    """Affine map lam -> A lam - b whose zeros are the witnesses for pair.

    Rows follow the Cochain2 flattening, columns the Cochain1 flattening;
    at the identity pair A is the D1 matrix.
    """
    B0, B1 = pair.beta0, pair.beta1
    A0, A1, A2 = pair.alpha.F0, pair.alpha.F1, pair.alpha.F2
    d, b00, b01, b10, l3 = g.tensors()
    P = rho.partial
    psi, om, mu, nu, th = c.parts()

    def lin(L0, L1, L2, ein=ein):
        r_psi = ein('ok,ka->oa', P, L1) - ein('oj,ja->oa', L0, d)
        r_om = (ein('oik,ix,ky->oxy', rho.l0_0, A0, L0) + ein('oik,iy,kx->oxy', rho.r0_0, A0, L0)
                - ein('oj,jxy->oxy', L0, b00) + ein('ok,kxy->oxy', P, L2))
        r_mu = (ein('oik,ix,ka->oxa', rho.l0_1, A0, L1) + ein('oik,ia,kx->oxa', rho.r1, A1, L0)
                - ein('oj,jxa->oxa', L1, b01) + ein('oxj,ja->oxa', L2, d))
        r_nu = (ein('oik,ia,kx->oax', rho.l1, A1, L0) + ein('oik,ix,ka->oax', rho.r0_1, A0, L1)
                - ein('oj,jax->oax', L1, b10) + ein('ojx,ja->oax', L2, d))
        r_th = (-ein('oj,jxyz->oxyz', L1, l3)
                - ein('oijk,ix,jy,kz->oxyz', rho.l2, A0, A0, L0)
                - ein('oijk,ix,jz,ky->oxyz', rho.m2, A0, A0, L0)
                - ein('oijk,iy,jz,kx->oxyz', rho.r2, A0, A0, L0)
                + ein('oxj,jyz->oxyz', L2, b00) - ein('ojz,jxy->oxyz', L2, b00)
                - ein('oyj,jxz->oxyz', L2, b00)
                + ein('oik,ix,kyz->oxyz', rho.l0_1, A0, L2)
                + ein('oik,iyz,kx->oxyz', rho.r1, A2, L0)
                - ein('oik,ixy,kz->oxyz', rho.l1, A2, L0)
                - ein('oik,iz,kxy->oxyz', rho.r0_1, A0, L2)
                - ein('oik,iy,kxz->oxyz', rho.l0_1, A0, L2)
                - ein('oik,ixz,ky->oxyz', rho.r1, A2, L0))
        return [r_psi, r_om, r_mu, r_nu, r_th]

    k_psi = ein('oi,ia->oa', B0, psi) - ein('oi,ia->oa', psi, A1)
    k_om = (ein('oi,ixy->oxy', B0, om) - ein('oij,ix,jy->oxy', om, A0, A0)
            - ein('oi,ixy->oxy', psi, A2))
    k_mu = ein('oi,ixa->oxa', B1, mu) - ein('oij,ix,ja->oxa', mu, A0, A1)
    k_nu = ein('oi,iax->oax', B1, nu) - ein('oij,ia,jx->oax', nu, A1, A0)
    k_th = (ein('oi,ixyz->oxyz', B1, th) - ein('oijk,ix,jy,kz->oxyz', th, A0, A0, A0)
            - ein('oij,ix,jyz->oxyz', mu, A0, A2) + ein('oij,ixy,jz->oxyz', nu, A2, A0)
            + ein('oij,iy,jxz->oxyz', mu, A0, A2))
    return lin, Cochain2(k_psi, k_om, k_mu, k_nu, k_th)


def _matrix_of(lin, g, rho):
    n, (L0, L1, L2) = unit_batch([p.shape for p in zero_cochain(g, rho, 1).parts()])
    m = dim_cochains(g, rho, 2)
    if n == 0 or m == 0:
        return zeros(m, n)
    rows = [r.reshape(n, -1) for r in lin(L0, L1, L2, ein=batched(L0, L1, L2))]
    return np.concatenate(rows, axis=1).T


def _solve(A, b, g, rho, strict):
    from .cochain import chi_free_columns
    from .exactla import solve
    if strict:
        cols = chi_free_columns(g, rho)
        x = solve(A[:, cols] if cols else zeros(A.shape[0], 0), b)
        if x is None:
            return None
        full = zeros(A.shape[1])
        for i, col in enumerate(cols):
            full[col] = x[i]
        return unflatten(g, rho, 1, full)
    x = solve(A, b)
    return None if x is None else unflatten(g, rho, 1, x)


def _setting(E, s):
    return memo(E, ("setting", split_key(s)),
                lambda: (E.base, induced_rep(E, s), extract_cocycle(E, s)))


def _cohomology(E, s, strict):
    g, rho, _ = _setting(E, s)
    return memo(E, ("cohomology", split_key(s), strict), lambda: Cohomology(g, rho, strict))


def _block_ext(g, rho, c):
    return build_extension(g, rho, c, check=False)


def _aut_block(pair, g, rho, lam):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    a = pair.alpha
    F0 = _block([[a.F0, zeros(n0, v0)], [lam.phi0, pair.beta0]])
    F1 = _block([[a.F1, zeros(n1, v1)], [lam.phi1, pair.beta1]])
    F2 = zeros(n1 + v1, n0 + v0, n0 + v0)
    F2[:n1, :n0, :n0] = a.F2
    F2[n1:, :n0, :n0] = lam.chi
    return Hom2(F0, F1, F2)


def _der_block(pair, g, rho, lam):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    a = pair.alpha
    D0 = _block([[a.D0, zeros(n0, v0)], [lam.phi0, pair.beta0]])
    D1 = _block([[a.D1, zeros(n1, v1)], [lam.phi1, pair.beta1]])
    D2 = zeros(n1 + v1, n0 + v0, n0 + v0)
    D2[:n1, :n0, :n0] = a.D2
    D2[n1:, :n0, :n0] = lam.chi
    return Derivation2(D0, D1, D2)


def der_to_hat(E, s, D):
    A0, A1 = frame(E, s)
    S0, S1 = inverse(A0), inverse(A1)
    return Derivation2(ein('ij,jk,kl->il', A0, D.D0, S0), ein('ij,jk,kl->il', A1, D.D1, S1),
                       ein('oj,jxy,xX,yY->oXY', A1, D.D2, S0, S0))


def der_to_block(E, s, D):
    A0, A1 = frame(E, s)
    S0, S1 = inverse(A0), inverse(A1)
    return Derivation2(ein('ij,jk,kl->il', S0, D.D0, A0), ein('ij,jk,kl->il', S1, D.D1, A1),
                       ein('oj,jXY,Xx,Yy->oxy', S1, D.D2, A0, A0))


def _fixes_fiber(M0, M1, E):
    i0, i1 = E.i.m0, E.i.m1
    return (is_zero(ein('ij,jk,kl->il', E.p.m0, M0, i0))
            and is_zero(ein('ij,jk,kl->il', E.p.m1, M1, i1)))


def _project(M0, M1, M2, E, s):
    if not _fixes_fiber(M0, M1, E):
        raise FiberNotPreserved("map does not keep the fibre invariant")
    j0, j1 = left_inverse(E.i.m0), left_inverse(E.i.m1)
    return (ein('ij,jk,kl->il', j0, M0, E.i.m0), ein('ij,jk,kl->il', j1, M1, E.i.m1),
            ein('ij,jk,kl->il', E.p.m0, M0, s.s0), ein('ij,jk,kl->il', E.p.m1, M1, s.s1),
            ein('oj,jXY,Xx,Yy->oxy', E.p.m1, M2, s.s0, s.s0))


def project_aut(F, E, s):
    b0, b1, a0, a1, a2 = _project(F.F0, F.F1, F.F2, E, s)
    return AutPair(b0, b1, Hom2(a0, a1, a2))


def project_der(D, E, s):
    b0, b1, a0, a1, a2 = _project(D.D0, D.D1, D.D2, E, s)
    return DerPair(b0, b1, Derivation2(a0, a1, a2))


# automorphisms

def wells_aut_cocycle(pair, E, s):
    """The cocycle of the extension transported along (beta, alpha)."""
    g, rho, c = _setting(E, s)
    Eb, sb = _block_ext(g, rho, c)
    T = _aut_block(pair, g, rho, zero_cochain(g, rho, 1))
    hat2 = transport(Eb.hat, T)
    E2 = Extension(hat2, g, rho.V, Eb.i, Eb.p)
    return extract_cocycle(E2, sb)


def wells_aut(pair, E, s, strict=False):
    """Canonical representative of the class [transported cocycle] - [cocycle]."""
    g, rho, c = _setting(E, s)
    ok, v = aut_compatible(pair, rho)
    if not ok:
        raise IncompatiblePair("pair fails %s" % sorted({x.axiom for x in v}))
    c2 = wells_aut_cocycle(pair, E, s)
    return _cohomology(E, s, strict).normal_form(c2 - c)


def aut_induce(pair, E, s, strict=False):
    g, rho, c = _setting(E, s)
    ok, v = aut_compatible(pair, rho)
    if not ok:
        return WellsReport(False, v)
    lin, b = coc_system(pair, g, rho, c)
    lam = _solve(_matrix_of(lin, g, rho), b.flat(), g, rho, strict)
    cls = wells_aut(pair, E, s, strict)
    if lam is None:
        return WellsReport(True, [], cls)
    F = block_to_hat(E, s, _aut_block(pair, g, rho, lam))
    if verify_hom(F, E.hat, E.hat):
        raise AssertionError("constructed automorphism fails the homomorphism conditions")
    return WellsReport(True, [], cls, lam, F)


def f_lambda(lam, E, s):
    g, rho, _ = _setting(E, s)
    if not is_1cocycle(lam, g, rho):
        raise NotOneCocycle("lambda is not a 1-cocycle")
    return block_to_hat(E, s, unipotent_block(g, rho.V, lam))


# derivations

def psi_action(pair, c):
    """The linearized action of a derivation pair on a 2-cochain."""
    B0, B1 = pair.beta0, pair.beta1
    A0, A1, A2 = pair.alpha.D0, pair.alpha.D1, pair.alpha.D2
    psi, om, mu, nu, th = c.parts()
    return Cochain2(
        ein('oi,ia->oa', B0, psi) - ein('oi,ia->oa', psi, A1),
        ein('oi,ixy->oxy', B0, om) - ein('oiy,ix->oxy', om, A0) - ein('oxi,iy->oxy', om, A0)
        - ein('oi,ixy->oxy', psi, A2),
        ein('oi,ixa->oxa', B1, mu) - ein('oia,ix->oxa', mu, A0) - ein('oxi,ia->oxa', mu, A1),
        ein('oi,iax->oax', B1, nu) - ein('oix,ia->oax', nu, A1) - ein('oai,ix->oax', nu, A0),
        ein('oi,ixyz->oxyz', B1, th) - ein('oiyz,ix->oxyz', th, A0)
        - ein('oxiz,iy->oxyz', th, A0) - ein('oxyi,iz->oxyz', th, A0)
        - ein('oxi,iyz->oxyz', mu, A2) + ein('oiz,ixy->oxyz', nu, A2)
        + ein('oyi,ixz->oxyz', mu, A2))


def wells_der(pair, E, s, strict=False):
    g, rho, c = _setting(E, s)
    ok, v = der_compatible(pair, rho)
    if not ok:
        raise IncompatiblePair("pair fails %s" % sorted({x.axiom for x in v}))
    return _cohomology(E, s, strict).normal_form(psi_action(pair, c))


def der_induce(pair, E, s, strict=False):
    g, rho, c = _setting(E, s)
    ok, v = der_compatible(pair, rho)
    if not ok:
        return WellsReport(False, v)
    lam = _solve(d1_matrix(g, rho), psi_action(pair, c).flat(), g, rho, strict)
    cls = wells_der(pair, E, s, strict)
    if lam is None:
        return WellsReport(True, [], cls)
    D = der_to_hat(E, s, _der_block(pair, g, rho, lam))
    if verify_derivation(D, E.hat):
        raise AssertionError("constructed derivation fails the derivation conditions")
    return WellsReport(True, [], cls, lam, D)


def d_lambda(lam, E, s):
    g, rho, _ = _setting(E, s)
    if not is_1cocycle(lam, g, rho):
        raise NotOneCocycle("lambda is not a 1-cocycle")
    return der_to_hat(E, s, _der_block(zero_pair(g, rho), g, rho, lam))


# exactness on samples

def exactness_report(E, s, lambdas=(), pairs=(), automorphisms=(), derivations=(),
                     der_pairs=()):
    """Checks of the Wells sequences on supplied samples; lists counterexamples."""
    g, rho, _ = _setting(E, s)
    ident, zp = identity_pair(g, rho), zero_pair(g, rho)
    problems = []
    maps = [f_lambda(l, E, s) for l in lambdas]
    ders = [d_lambda(l, E, s) for l in lambdas]
    for a in range(len(lambdas)):
        for b in range(a):
            if (lambdas[a] == lambdas[b]) != (maps[a] == maps[b]):
                problems.append(("injective", a, b))
            if (lambdas[a] == lambdas[b]) != (ders[a] == ders[b]):
                problems.append(("injective_der", a, b))
    for k, (F, D) in enumerate(zip(maps, ders)):
        if project_aut(F, E, s) != ident:
            problems.append(("kernel", k))
        if project_der(D, E, s) != zp:
            problems.append(("kernel_der", k))
    for k, F in enumerate(automorphisms):
        P = project_aut(F, E, s)
        if not is_zero(wells_aut(P, E, s)):
            problems.append(("image", k))
        if P == ident:
            lam = _lambda_of(F, E, s, g, rho)
            if f_lambda(lam, E, s) != F:
                problems.append(("kernel_converse", k))
    for k, D in enumerate(derivations):
        P = project_der(D, E, s)
        if not is_zero(wells_der(P, E, s)):
            problems.append(("image_der", k))
    for k, P in enumerate(pairs):
        if aut_compatible(P, rho)[0]:
            r = aut_induce(P, E, s)
            if r.inducible != is_zero(r.obstruction_class):
                problems.append(("dichotomy", k))
    for k, P in enumerate(der_pairs):
        if der_compatible(P, rho)[0]:
            r = der_induce(P, E, s)
            if r.inducible != is_zero(r.obstruction_class):
                problems.append(("dichotomy_der", k))
    return {"ok": not problems, "problems": problems}


def _lambda_of(F, E, s, g, rho):
    from .ext import hat_to_block
    B = hat_to_block(E, s, F)
    n0, n1 = g.dim0, g.dim1
    return unflatten(g, rho, 1, np.concatenate([
        B.F0[n0:, :n0].reshape(-1), B.F1[n1:, :n1].reshape(-1),
        B.F2[n1:, :n0, :n0].reshape(-1)]))
