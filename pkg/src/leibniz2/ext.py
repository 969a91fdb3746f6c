"""Abelian extensions 0 -> V -> hat(g) -> g -> 0.

build_extension puts hat(g) in block coordinates: degree 0 is g0 + V0
and degree 1 is g1 + V1, base coordinates first.
"""
import weakref
from dataclasses import dataclass

import numpy as np

from .cochain import Cochain2, NotCocycle, d1_matrix, is_cocycle2, unflatten, zero_cochain
from .exactla import eye, inverse, is_zero, left_inverse, rank, right_inverse, solve, zeros
from .leib2 import Hom2, Leibniz2Algebra, verify_algebra, verify_hom
from .rep import Representation, verify_representation
from .structure import GradedMap, TwoTermComplex, ein


class InvalidExtension(ValueError):
    pass


class FiberEscape(InvalidExtension):
    pass


class InvalidRepresentation(ValueError):
    pass


_memo = weakref.WeakKeyDictionary()


def memo(E, key, make):
    """make() cached on the extension E under key; E is treated as immutable."""
    d = _memo.setdefault(E, {})
    if key not in d:
        d[key] = make()
    return d[key]


def split_key(s):
    return (s.s0.shape, tuple(s.s0.reshape(-1)), s.s1.shape, tuple(s.s1.reshape(-1)))


@dataclass(frozen=True, eq=False)
class Extension:
    hat: Leibniz2Algebra
    base: Leibniz2Algebra
    fiber: TwoTermComplex
    i: GradedMap
    p: GradedMap


@dataclass(frozen=True, eq=False)
class Splitting:
    s0: np.ndarray
    s1: np.ndarray

    def __eq__(self, other):
        return (isinstance(other, Splitting) and bool(np.all(self.s0 == other.s0))
                and bool(np.all(self.s1 == other.s1)))

    __hash__ = None


def _block(rows):
    return np.concatenate([np.concatenate(r, axis=1) for r in rows], axis=0)


def block_inclusions(n, v):
    """(inclusion of the base block, inclusion of the fibre block, projection)."""
    s = np.concatenate([eye(n), zeros(v, n)], axis=0)
    i = np.concatenate([zeros(n, v), eye(v)], axis=0)
    p = np.concatenate([eye(n), zeros(n, v)], axis=1)
    return s, i, p


def semidirect_tensors(g, rho, c):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    N0, N1 = n0 + v0, n1 + v1
    G0, G1 = slice(0, n0), slice(0, n1)
    W0, W1 = slice(n0, N0), slice(n1, N1)
    d = _block([[g.d, zeros(n0, v1)], [c.psi, rho.partial]])
    b00 = zeros(N0, N0, N0)
    b00[G0, G0, G0] = g.b00
    b00[W0, G0, G0] = c.omega
    b00[W0, G0, W0] = rho.l0_0
    b00[W0, W0, G0] = rho.r0_0.transpose(0, 2, 1)
    b01 = zeros(N1, N0, N1)
    b01[G1, G0, G1] = g.b01
    b01[W1, G0, G1] = c.mu
    b01[W1, G0, W1] = rho.l0_1
    b01[W1, W0, G1] = rho.r1.transpose(0, 2, 1)
    b10 = zeros(N1, N1, N0)
    b10[G1, G1, G0] = g.b10
    b10[W1, G1, G0] = c.nu
    b10[W1, G1, W0] = rho.l1
    b10[W1, W1, G0] = rho.r0_1.transpose(0, 2, 1)
    l3 = zeros(N1, N0, N0, N0)
    l3[G1, G0, G0, G0] = g.l3
    l3[W1, G0, G0, G0] = c.theta
    l3[W1, G0, G0, W0] = -rho.l2
    l3[W1, G0, W0, G0] = -rho.m2.transpose(0, 1, 3, 2)
    l3[W1, W0, G0, G0] = -rho.r2.transpose(0, 3, 1, 2)
    return Leibniz2Algebra(d, b00, b01, b10, l3)


def build_extension(g, rho, c, check=True):
    """The extension of g by V classified by the 2-cocycle c, with its block splitting."""
    if check:
        if verify_representation(rho, g):
            raise InvalidRepresentation("rho is not a representation of g")
        ok, res = is_cocycle2(c, g, rho)
        if not ok:
            raise NotCocycle("cochain is not a 2-cocycle")
    hat = semidirect_tensors(g, rho, c)
    s0, i0, p0 = block_inclusions(g.dim0, rho.dimV0)
    s1, i1, p1 = block_inclusions(g.dim1, rho.dimV1)
    E = Extension(hat, g, rho.V, GradedMap(i0, i1), GradedMap(p0, p1))
    return E, Splitting(s0, s1)


def semidirect(g, rho):
    return build_extension(g, rho, zero_cochain(g, rho, 2))


def _fiber_ops(E):
    return left_inverse(E.i.m0), left_inverse(E.i.m1)


def check_extension(E):
    """List of problems; empty when E is a valid abelian extension."""
    hat, g, V = E.hat, E.base, E.fiber
    i0, i1, p0, p1 = E.i.m0, E.i.m1, E.p.m0, E.p.m1
    probs = []
    shapes = [(i0, (hat.dim0, V.dim0)), (i1, (hat.dim1, V.dim1)),
              (p0, (g.dim0, hat.dim0)), (p1, (g.dim1, hat.dim1))]
    for m, s in shapes:
        if m.shape != s:
            return ["map of shape %s, expected %s" % (m.shape, s)]
    if verify_algebra(hat):
        probs.append("total algebra fails the axioms")
    if verify_algebra(g):
        probs.append("base algebra fails the axioms")
    for k, (i, p) in enumerate(((i0, p0), (i1, p1))):
        if not is_zero(ein('ij,jk->ik', p, i)):
            probs.append("p%d i%d != 0" % (k, k))
        if rank(i) != i.shape[1]:
            probs.append("i%d not injective" % k)
        if rank(p) != p.shape[0]:
            probs.append("p%d not surjective" % k)
        if i.shape[1] + p.shape[0] != i.shape[0]:
            probs.append("ker p%d != im i%d" % (k, k))
    if probs:
        return probs
    if not is_zero(ein('ij,ja->ia', hat.d, i1) - ein('ij,ja->ia', i0, V.d)):
        probs.append("d i1 != i0 partial")
    if verify_hom(Hom2(p0, p1, zeros(g.dim1, hat.dim0, hat.dim0)), hat, g):
        probs.append("p is not a strict homomorphism")
    # brackets and l3 with two or more fibre arguments vanish
    if not (is_zero(ein('oXY,Xu,Yv->ouv', hat.b00, i0, i0))
            and is_zero(ein('oXA,Xu,Am->oum', hat.b01, i0, i1))
            and is_zero(ein('oAX,Am,Xu->omu', hat.b10, i1, i0))):
        probs.append("fibre is not abelian")
    l3 = hat.l3
    for a, b in ((1, 2), (1, 3), (2, 3)):
        t = np.tensordot(l3, i0, axes=([a], [0]))
        t = np.moveaxis(t, -1, a)
        t = np.tensordot(t, i0, axes=([b], [0]))
        if not is_zero(t):
            probs.append("l3 does not vanish on two fibre arguments")
            break
    return probs


def validate_extension(E):
    def run():
        probs = check_extension(E)
        if probs:
            raise InvalidExtension("; ".join(probs))
        return True
    return memo(E, "valid", run)


def find_splitting(E):
    return Splitting(right_inverse(E.p.m0), right_inverse(E.p.m1))


def _to_fiber(iinv, i, t, what):
    # t has the hat coordinate first; it must lie in the image of i
    out = np.tensordot(iinv, t, axes=([1], [0]))
    back = np.tensordot(i, out, axes=([1], [0]))
    if not is_zero(back - t):
        raise FiberEscape("%s leaves the fibre" % what)
    return out


def induced_rep(E, s):
    hat = E.hat
    i0, i1 = E.i.m0, E.i.m1
    j0, j1 = _fiber_ops(E)
    s0, s1 = s.s0, s.s1
    blocks = {
        "partial": E.fiber.d.copy(),
        "l0_0": _to_fiber(j0, i0, ein('oXY,Xx,Yv->oxv', hat.b00, s0, i0), "l0"),
        "l0_1": _to_fiber(j1, i1, ein('oXA,Xx,Am->oxm', hat.b01, s0, i1), "l0"),
        "r0_0": _to_fiber(j0, i0, ein('oXY,Xu,Yx->oxu', hat.b00, i0, s0), "r0"),
        "r0_1": _to_fiber(j1, i1, ein('oAX,Am,Xx->oxm', hat.b10, i1, s0), "r0"),
        "l1": _to_fiber(j1, i1, ein('oAX,Aa,Xu->oau', hat.b10, s1, i0), "l1"),
        "r1": _to_fiber(j1, i1, ein('oXA,Xu,Aa->oau', hat.b01, i0, s1), "r1"),
        "l2": -_to_fiber(j1, i1, ein('oXYZ,Xx,Yy,Zu->oxyu', hat.l3, s0, s0, i0), "l2"),
        "m2": -_to_fiber(j1, i1, ein('oXYZ,Xx,Yu,Zy->oxyu', hat.l3, s0, i0, s0), "m2"),
        "r2": -_to_fiber(j1, i1, ein('oXYZ,Xu,Yx,Zy->oxyu', hat.l3, i0, s0, s0), "r2"),
    }
    return Representation(**blocks)


def extract_cocycle(E, s):
    hat, g = E.hat, E.base
    i0, i1 = E.i.m0, E.i.m1
    j0, j1 = _fiber_ops(E)
    s0, s1 = s.s0, s.s1
    psi = ein('XA,Aa->Xa', hat.d, s1) - ein('Xx,xa->Xa', s0, g.d)
    omega = ein('oXY,Xx,Yy->oxy', hat.b00, s0, s0) - ein('oj,jxy->oxy', s0, g.b00)
    mu = ein('oXA,Xx,Aa->oxa', hat.b01, s0, s1) - ein('oj,jxa->oxa', s1, g.b01)
    nu = ein('oAX,Aa,Xx->oax', hat.b10, s1, s0) - ein('oj,jax->oax', s1, g.b10)
    theta = (ein('oXYZ,Xx,Yy,Zz->oxyz', hat.l3, s0, s0, s0)
             - ein('oj,jxyz->oxyz', s1, g.l3))
    return Cochain2(_to_fiber(j0, i0, psi, "psi"), _to_fiber(j0, i0, omega, "omega"),
                    _to_fiber(j1, i1, mu, "mu"), _to_fiber(j1, i1, nu, "nu"),
                    _to_fiber(j1, i1, theta, "theta"))


def frame(E, s):
    """Invertible change of coordinates (block -> hat) in both degrees: columns [s | i]."""
    return (np.concatenate([s.s0, E.i.m0], axis=1),
            np.concatenate([s.s1, E.i.m1], axis=1))


def block_to_hat(E, s, F, target=None, target_split=None):
    """Rewrite a homomorphism given in block coordinates in the hat coordinates."""
    target = target or E
    target_split = target_split or s
    A0, A1 = frame(E, s)
    B0, B1 = frame(target, target_split)
    S0 = inverse(A0)
    return Hom2(ein('ij,jk,kl->il', B0, F.F0, S0), ein('ij,jk,kl->il', B1, F.F1, inverse(A1)),
                ein('oj,jxy,xX,yY->oXY', B1, F.F2, S0, S0))


def hat_to_block(E, s, F):
    A0, A1 = frame(E, s)
    S0, S1 = inverse(A0), inverse(A1)
    return Hom2(ein('ij,jk,kl->il', S0, F.F0, A0), ein('ij,jk,kl->il', S1, F.F1, A1),
                ein('oj,jXY,Xx,Yy->oxy', S1, F.F2, A0, A0))


def unipotent_block(g, V, lam):
    """Block form x+u -> x + lam0 x + u, a+m -> a + lam1 a + m, quadratic part lam2."""
    n0, n1, v0, v1 = g.dim0, g.dim1, V.dim0, V.dim1
    F0 = _block([[eye(n0), zeros(n0, v0)], [lam.phi0, eye(v0)]])
    F1 = _block([[eye(n1), zeros(n1, v1)], [lam.phi1, eye(v1)]])
    F2 = zeros(n1 + v1, n0 + v0, n0 + v0)
    F2[n1:, :n0, :n0] = lam.chi
    return Hom2(F0, F1, F2)


def extensions_equivalent(E1, E2):
    """A homomorphism F: hat1 -> hat2 with F i1 = i2, p2 F = p1 and F2 vanishing on
    the fibre, or None when the extensions are not equivalent."""
    if (E1.base != E2.base or E1.fiber.dim0 != E2.fiber.dim0
            or E1.fiber.dim1 != E2.fiber.dim1):
        raise ValueError("extensions must share base and fibre")
    s1, s2 = find_splitting(E1), find_splitting(E2)
    rho1, rho2 = induced_rep(E1, s1), induced_rep(E2, s2)
    if rho1 != rho2:
        return None
    g = E1.base
    c1, c2 = extract_cocycle(E1, s1), extract_cocycle(E2, s2)
    x = solve(d1_matrix(g, rho1), (c1 - c2).flat())
    if x is None:
        return None
    lam = unflatten(g, rho1, 1, x)
    F = block_to_hat(E1, s1, unipotent_block(g, E1.fiber, lam), E2, s2)
    assert not verify_hom(F, E1.hat, E2.hat)
    assert is_equivalence(F, E1, E2)
    return F


def is_equivalence(F, E1, E2):
    i0, i1 = E1.i.m0, E1.i.m1
    ok = (bool(np.all(ein('ij,jk->ik', F.F0, i0) == E2.i.m0))
          and bool(np.all(ein('ij,jk->ik', F.F1, i1) == E2.i.m1))
          and bool(np.all(ein('ij,jk->ik', E2.p.m0, F.F0) == E1.p.m0))
          and bool(np.all(ein('ij,jk->ik', E2.p.m1, F.F1) == E1.p.m1))
          and is_zero(ein('oXY,Xu->ouY', F.F2, i0))
          and is_zero(ein('oXY,Yu->oXu', F.F2, i0)))
    return ok and not verify_hom(F, E1.hat, E2.hat)
