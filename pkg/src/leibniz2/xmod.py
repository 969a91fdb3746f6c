"""Crossed modules over Leibniz algebras and their Wells machinery.

A crossed module (p1, p0, f) is the same data as a strict Leibniz
2-algebra: b00 is the bracket of p0, b01 the left action x.a, b10 the
right action a.x, d = f and l3 = 0.  Extensions of crossed modules are
Extension objects whose total and base algebras are strict; their
cocycles are Cochain2 values with theta = 0, where the psi slot holds the
map p1 -> V0.
"""
from dataclasses import dataclass

import numpy as np

from .cochain import Cochain2, Cohomology, unflatten
from .exactla import eye, inverse, is_invertible, is_zero, solve, zeros
from .ext import (build_extension, extract_cocycle, induced_rep, memo, split_key,
                  validate_extension, _block)
from .ext import block_to_hat
from .leib2 import Derivation2, Hom2, Leibniz2Algebra, collect, is_strict
from .rep import verify_representation
from .structure import ShapeError, as_tensor, batched, ein, unit_batch
from .wells import (IncompatiblePair, InvalidPair, WellsReport, der_to_hat, _mats)


class NotStrict(ValueError):
    pass


class InvalidCrossedModule(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CrossedModule:
    bracket: np.ndarray
    dim1: int
    left: np.ndarray
    right: np.ndarray
    f: np.ndarray

    @property
    def dim0(self):
        return self.bracket.shape[0]

    def __eq__(self, other):
        return (isinstance(other, CrossedModule) and self.dim1 == other.dim1
                and all(a.shape == b.shape and bool(np.all(a == b)) for a, b in (
                    (self.bracket, other.bracket), (self.left, other.left),
                    (self.right, other.right), (self.f, other.f))))

    __hash__ = None


def crossed_module(dim0, dim1, bracket=None, left=None, right=None, f=None):
    def t(x, s):
        return zeros(*s) if x is None else as_tensor(x, s)
    return CrossedModule(t(bracket, (dim0, dim0, dim0)), dim1, t(left, (dim1, dim0, dim1)),
                         t(right, (dim1, dim1, dim0)), t(f, (dim0, dim1)))


def check_xmod(x):
    br, L, R, f = x.bracket, x.left, x.right, x.f
    return [
        ("Leibniz", ein('oxj,jyz->oxyz', br, br) - ein('ojz,jxy->oxyz', br, br)
         - ein('oyj,jxz->oxyz', br, br)),
        ("LLM", ein('oxj,jya->oxya', L, L) - ein('oja,jxy->oxya', L, br)
         - ein('oyj,jxa->oxya', L, L)),
        ("LML", ein('oxj,jay->oxay', L, R) - ein('ojy,jxa->oxay', R, L)
         - ein('oaj,jxy->oxay', R, br)),
        ("MLL", ein('oaj,jxy->oaxy', R, br) - ein('ojy,jax->oaxy', R, R)
         - ein('oxj,jay->oaxy', L, R)),
        ("crossed01 left", ein('oj,jxa->oxa', f, L) - ein('oxj,ja->oxa', br, f)),
        ("crossed01 right", ein('oj,jax->oax', f, R) - ein('ojx,ja->oax', br, f)),
        ("crossed02", ein('oja,jb->oba', L, f) - ein('obj,ja->oba', R, f)),
    ]


def verify_xmod(x):
    if (x.left.shape != (x.dim1, x.dim0, x.dim1) or x.right.shape != (x.dim1, x.dim1, x.dim0)
            or x.f.shape != (x.dim0, x.dim1)):
        raise ShapeError("crossed module blocks have inconsistent shapes")
    return collect(check_xmod(x))


def xmod_to_strict(x):
    return Leibniz2Algebra(x.f.copy(), x.bracket.copy(), x.left.copy(), x.right.copy(),
                           zeros(x.dim1, x.dim0, x.dim0, x.dim0))


def strict_to_xmod(g):
    if not is_strict(g):
        raise NotStrict("l3 is not zero")
    return CrossedModule(g.b00.copy(), g.dim1, g.b01.copy(), g.b10.copy(), g.d.copy())


def xmod_rep(x, partial, **blocks):
    """A representation of the crossed module: the strict case with l2 = m2 = r2 = 0."""
    from .rep import representation
    for k in ("l2", "m2", "r2"):
        if k in blocks:
            raise ShapeError("crossed module representations have no %s" % k)
    p = np.asarray(partial, dtype=object)
    return representation(xmod_to_strict(x), p.shape[0], p.shape[1], partial=partial, **blocks)


def verify_xmod_rep(rho, x):
    v = verify_representation(rho, xmod_to_strict(x))
    if not (is_zero(rho.l2) and is_zero(rho.m2) and is_zero(rho.r2)):
        v = v + collect([("l2 m2 r2 vanish", np.concatenate(
            [rho.l2.reshape(-1), rho.m2.reshape(-1), rho.r2.reshape(-1)]))])
    return v


def xmod_semidirect(x, rho):
    """The semidirect product crossed module on (p1 + V1, p0 + V0)."""
    if verify_xmod_rep(rho, x):
        raise InvalidCrossedModule("not a representation of the crossed module")
    n0, n1, v0, v1 = x.dim0, x.dim1, rho.dimV0, rho.dimV1
    N0, N1 = n0 + v0, n1 + v1
    G0, G1, W0, W1 = slice(0, n0), slice(0, n1), slice(n0, N0), slice(n1, N1)
    f = _block([[x.f, zeros(n0, v1)], [zeros(v0, n1), rho.partial]])
    br = zeros(N0, N0, N0)
    br[G0, G0, G0] = x.bracket
    br[W0, G0, W0] = rho.l0_0
    br[W0, W0, G0] = rho.r0_0.transpose(0, 2, 1)
    L = zeros(N1, N0, N1)
    L[G1, G0, G1] = x.left
    L[W1, G0, W1] = rho.l0_1
    L[W1, W0, G1] = rho.r1.transpose(0, 2, 1)
    R = zeros(N1, N1, N0)
    R[G1, G1, G0] = x.right
    R[W1, W1, G0] = rho.r0_1.transpose(0, 2, 1)
    R[W1, G1, W0] = rho.l1
    return CrossedModule(br, N1, L, R, f)


# extensions

def xmod_cocycle(x, rho, theta=None, omega=None, mu=None, nu=None):
    """A crossed-module 2-cochain; theta is the map p1 -> V0."""
    from .cochain import cochain
    return cochain(xmod_to_strict(x), rho, 2, psi=theta, omega=omega, mu=mu, nu=nu)


def xmod_extension(x, rho, c):
    if not is_zero(c.theta):
        raise ValueError("crossed-module cocycles have no degree-3 component")
    return build_extension(xmod_to_strict(x), rho, c)


def validate_xmod_extension(E):
    validate_extension(E)
    if not (is_strict(E.hat) and is_strict(E.base)):
        raise NotStrict("crossed-module extensions have l3 = 0")
    return True


@dataclass(frozen=True, eq=False)
class XModPair:
    beta0: np.ndarray
    beta1: np.ndarray
    alpha0: np.ndarray
    alpha1: np.ndarray


def _xmod_hom_conditions(a0, a1, x):
    br, L, R, f = x.bracket, x.left, x.right, x.f
    return [
        ("1", ein('ij,ja->ia', a0, f) - ein('ij,ja->ia', f, a1)),
        ("2", ein('oj,jxy->oxy', a0, br) - ein('ojk,jx,ky->oxy', br, a0, a0)),
        ("3", ein('oj,jxa->oxa', a1, L) - ein('ojk,jx,ka->oxa', L, a0, a1)),
        ("4", ein('oj,jax->oax', a1, R) - ein('ojk,ja,kx->oax', R, a1, a0)),
    ]


def _xmod_der_conditions(a0, a1, x):
    br, L, R, f = x.bracket, x.left, x.right, x.f
    return [
        ("1", ein('ij,ja->ia', a0, f) - ein('ij,ja->ia', f, a1)),
        ("2", ein('oj,jxy->oxy', a0, br) - ein('ojy,jx->oxy', br, a0)
         - ein('oxj,jy->oxy', br, a0)),
        ("3", ein('oj,jxa->oxa', a1, L) - ein('oja,jx->oxa', L, a0)
         - ein('oxj,ja->oxa', L, a1)),
        ("4", ein('oj,jax->oax', a1, R) - ein('ojx,ja->oax', R, a1)
         - ein('oaj,jx->oax', R, a0)),
    ]


def xmod_aut_pair(x, partial, beta0, beta1, alpha0, alpha1):
    from .leib2 import _arr
    b0, b1 = _mats(beta0, beta1, None, _arr(partial))
    a0, a1 = _arr(alpha0), _arr(alpha1)
    if a0.shape != (x.dim0, x.dim0) or a1.shape != (x.dim1, x.dim1):
        raise ShapeError("alpha blocks do not match the crossed module")
    if not all(is_invertible(m) for m in (b0, b1, a0, a1)):
        raise InvalidPair("pair is not invertible")
    if collect(_xmod_hom_conditions(a0, a1, x)):
        raise InvalidPair("alpha is not a crossed-module homomorphism")
    return XModPair(b0, b1, a0, a1)


def xmod_der_pair(x, partial, beta0, beta1, alpha0, alpha1):
    from .leib2 import _arr
    b0, b1 = _mats(beta0, beta1, None, _arr(partial))
    a0, a1 = _arr(alpha0), _arr(alpha1)
    if a0.shape != (x.dim0, x.dim0) or a1.shape != (x.dim1, x.dim1):
        raise ShapeError("alpha blocks do not match the crossed module")
    if collect(_xmod_der_conditions(a0, a1, x)):
        raise InvalidPair("alpha is not a crossed-module derivation")
    return XModPair(b0, b1, a0, a1)


def as_aut_pair(P):
    """The same pair as an automorphism pair of the strict algebra (alpha2 = 0)."""
    from .wells import AutPair
    return AutPair(P.beta0, P.beta1, Hom2(P.alpha0, P.alpha1,
                                          zeros(P.alpha1.shape[0], *P.alpha0.shape)))


def as_der_pair(P):
    from .wells import DerPair
    return DerPair(P.beta0, P.beta1, Derivation2(P.alpha0, P.alpha1,
                                                 zeros(P.alpha1.shape[0], *P.alpha0.shape)))


def cro_compat(P, rho):
    B0, B1, A0, A1 = P.beta0, P.beta1, P.alpha0, P.alpha1
    C0, C1 = inverse(B0), inverse(B1)

    def c(t, out, inn, A):
        return ein('oi,ixj,jv->oxv', out, t, inn) - ein('oyv,yx->oxv', t, A)
    return [
        ("CRO5", c(rho.l0_0, B0, C0, A0)),
        ("CRO6", c(rho.r0_0, B0, C0, A0)),
        ("CRO7", c(rho.l0_1, B1, C1, A0)),
        ("CRO8", c(rho.r0_1, B1, C1, A0)),
        ("CRO9", c(rho.r1, B1, C0, A1)),
        ("CRO10", c(rho.l1, B1, C0, A1)),
    ]


def rcocy_compat(P, rho):
    B0, B1, A0, A1 = P.beta0, P.beta1, P.alpha0, P.alpha1

    def c(t, out, inn, A):
        return (ein('oi,ixv->oxv', out, t) - ein('oyv,yx->oxv', t, A)
                - ein('oxj,jv->oxv', t, inn))
    return [
        ("RCOCY5", c(rho.l0_0, B0, B0, A0)),
        ("RCOCY6", c(rho.r0_0, B0, B0, A0)),
        ("RCOCY7", c(rho.l0_1, B1, B1, A0)),
        ("RCOCY8", c(rho.r0_1, B1, B1, A0)),
        ("RCOCY9", c(rho.l1, B1, B0, A1)),
        ("RCOCY10", c(rho.r1, B1, B0, A1)),
    ]


def _xsetting(E, s):
    validate_xmod_extension(E)
    return memo(E, ("xsetting", split_key(s)),
                lambda: (strict_to_xmod(E.base), induced_rep(E, s), extract_cocycle(E, s)))


def _cro_system(P, x, rho, c, derivation):
    """Columns: lam0 then lam1 coordinates; rows: the four cocycle slots."""
    A0, A1 = P.alpha0, P.alpha1
    n0, n1, v0, v1 = x.dim0, x.dim1, rho.dimV0, rho.dimV1
    I0, I1 = eye(n0), eye(n1)
    outer0, outer1 = (I0, I1) if derivation else (A0, A1)

    def lin(L0, L1, ein=ein):
        return [
            ein('ok,ka->oa', rho.partial, L1) - ein('oj,ja->oa', L0, x.f),
            ein('oik,ix,ky->oxy', rho.l0_0, outer0, L0) + ein('oik,iy,kx->oxy', rho.r0_0, outer0, L0)
            - ein('oj,jxy->oxy', L0, x.bracket),
            ein('oik,ix,ka->oxa', rho.l0_1, outer0, L1) + ein('oik,ia,kx->oxa', rho.r1, outer1, L0)
            - ein('oj,jxa->oxa', L1, x.left),
            ein('oik,ix,ka->oax', rho.r0_1, outer0, L1) + ein('oik,ia,kx->oax', rho.l1, outer1, L0)
            - ein('oj,jax->oax', L1, x.right),
        ]

    n, (L0, L1) = unit_batch([(v0, n0), (v1, n1)])
    m = v0 * n1 + v0 * n0 * n0 + 2 * v1 * n0 * n1
    if n and m:
        rows = [r.reshape(n, -1) for r in lin(L0, L1, ein=batched(L0, L1))]
        A = np.concatenate(rows, axis=1).T
    else:
        A = zeros(m, n)
    B0, B1 = P.beta0, P.beta1
    if derivation:
        rhs = [ein('oi,ia->oa', B0, c.psi) - ein('oi,ia->oa', c.psi, A1),
               ein('oi,ixy->oxy', B0, c.omega) - ein('oiy,ix->oxy', c.omega, A0)
               - ein('oxi,iy->oxy', c.omega, A0),
               ein('oi,ixa->oxa', B1, c.mu) - ein('oia,ix->oxa', c.mu, A0)
               - ein('oxi,ia->oxa', c.mu, A1),
               ein('oi,iax->oax', B1, c.nu) - ein('oix,ia->oax', c.nu, A1)
               - ein('oai,ix->oax', c.nu, A0)]
    else:
        rhs = [ein('oi,ia->oa', B0, c.psi) - ein('oi,ia->oa', c.psi, A1),
               ein('oi,ixy->oxy', B0, c.omega) - ein('oij,ix,jy->oxy', c.omega, A0, A0),
               ein('oi,ixa->oxa', B1, c.mu) - ein('oij,ix,ja->oxa', c.mu, A0, A1),
               ein('oi,iax->oax', B1, c.nu) - ein('oij,ia,jx->oax', c.nu, A1, A0)]
    b = np.concatenate([r.reshape(-1) for r in rhs])
    return A, b


def _lam(x, rho, sol):
    g = xmod_to_strict(x)
    full = np.concatenate([sol, zeros(rho.dimV1 * g.dim0 * g.dim0)])
    return unflatten(g, rho, 1, full)


def _xmod_class(E, s, diff):
    x, rho, _ = _xsetting(E, s)
    S = memo(E, ("xcohomology", split_key(s)),
             lambda: Cohomology(xmod_to_strict(x), rho, strict=True))
    return S.normal_form(diff)


def xmod_wells(P, E, s):
    """Class of beta c(alpha^-1 .) - c for an automorphism pair."""
    x, rho, c = _xsetting(E, s)
    v = collect(cro_compat(P, rho))
    if v:
        raise IncompatiblePair("pair fails %s" % sorted({w.axiom for w in v}))
    S0, S1 = inverse(P.alpha0), inverse(P.alpha1)
    B0, B1 = P.beta0, P.beta1
    t = Cochain2(ein('oi,ij,ja->oa', B0, c.psi, S1),
                 ein('oi,ijk,jx,ky->oxy', B0, c.omega, S0, S0),
                 ein('oi,ijk,jx,ka->oxa', B1, c.mu, S0, S1),
                 ein('oi,ijk,ja,kx->oax', B1, c.nu, S1, S0),
                 c.theta)
    return _xmod_class(E, s, t - c)


def xmod_wells_der(P, E, s):
    from .wells import psi_action
    x, rho, c = _xsetting(E, s)
    v = collect(rcocy_compat(P, rho))
    if v:
        raise IncompatiblePair("pair fails %s" % sorted({w.axiom for w in v}))
    return _xmod_class(E, s, psi_action(as_der_pair(P), c))


def _induce(P, E, s, derivation):
    x, rho, c = _xsetting(E, s)
    v = collect((rcocy_compat if derivation else cro_compat)(P, rho))
    if v:
        return WellsReport(False, v)
    A, b = _cro_system(P, x, rho, c, derivation)
    sol = solve(A, b)
    cls = (xmod_wells_der if derivation else xmod_wells)(P, E, s)
    if sol is None:
        return WellsReport(True, [], cls)
    lam = _lam(x, rho, sol)
    g = E.base
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    M0 = _block([[P.alpha0, zeros(n0, v0)], [lam.phi0, P.beta0]])
    M1 = _block([[P.alpha1, zeros(n1, v1)], [lam.phi1, P.beta1]])
    M2 = zeros(n1 + v1, n0 + v0, n0 + v0)
    if derivation:
        induced = der_to_hat(E, s, Derivation2(M0, M1, M2))
    else:
        induced = block_to_hat(E, s, Hom2(M0, M1, M2))
    xh = strict_to_xmod(E.hat)
    conds = (_xmod_der_conditions if derivation else _xmod_hom_conditions)
    a, b_ = (induced.D0, induced.D1) if derivation else (induced.F0, induced.F1)
    if collect(conds(a, b_, xh)):
        raise AssertionError("constructed map fails the crossed-module conditions")
    return WellsReport(True, [], cls, lam, induced)


def xmod_aut_induce(P, E, s):
    return _induce(P, E, s, False)


def xmod_der_induce(P, E, s):
    return _induce(P, E, s, True)
