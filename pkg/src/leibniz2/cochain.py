"""Cochains, the coboundaries D1 and D2, and low-degree cohomology.

Component layouts (o = output coordinate):

    Cochain1  phi0 (V0, g0)  phi1 (V1, g1)  chi (V1, g0, g0)
    Cochain2  psi (V0, g1)  omega (V0, g0, g0)  mu (V1, g0, g1)
              nu (V1, g1, g0)  theta (V1, g0, g0, g0)
    Cochain3  c01 (V0, g0, g1)  c10 (V0, g1, g0)  c11 (V1, g1, g1)
              c000 (V0, g0^3)  c001 (V1, g0, g0, g1)  c010 (V1, g0, g1, g0)
              c100 (V1, g1, g0, g0)  c0000 (V1, g0^4)

A cochain flattens to the concatenation of its components in field
order, each component row-major.  D2 has one block of rows per
cocycle family, in the order of the Cochain3 fields.
"""
from dataclasses import dataclass, fields
from math import lcm

import numpy as np

from .exactla import Reducer, is_zero, kernel_basis, q, rref, solve, zeros
from .leib2 import Leibniz2Algebra
from .rep import check_shapes
from .structure import ShapeError, batched, ein


class NotCocycle(ValueError):
    pass


class _Bundle:
    def parts(self):
        return [getattr(self, f.name) for f in fields(self)]

    def flat(self):
        ps = [p.reshape(-1) for p in self.parts()]
        return q(np.concatenate(ps)) if sum(p.size for p in ps) else zeros(0)

    def __eq__(self, other):
        return type(self) is type(other) and all(
            a.shape == b.shape and bool(np.all(a == b))
            for a, b in zip(self.parts(), other.parts()))

    __hash__ = None

    def __add__(self, other):
        return type(self)(*[a + b for a, b in zip(self.parts(), other.parts())])

    def __sub__(self, other):
        return type(self)(*[a - b for a, b in zip(self.parts(), other.parts())])

    def __neg__(self):
        return type(self)(*[-a for a in self.parts()])

    def scale(self, k):
        return type(self)(*[q(k) * a for a in self.parts()])

    def is_zero(self):
        return all(is_zero(p) for p in self.parts())


@dataclass(frozen=True, eq=False)
class Cochain1(_Bundle):
    phi0: np.ndarray
    phi1: np.ndarray
    chi: np.ndarray


@dataclass(frozen=True, eq=False)
class Cochain2(_Bundle):
    psi: np.ndarray
    omega: np.ndarray
    mu: np.ndarray
    nu: np.ndarray
    theta: np.ndarray


@dataclass(frozen=True, eq=False)
class Cochain3(_Bundle):
    c01: np.ndarray
    c10: np.ndarray
    c11: np.ndarray
    c000: np.ndarray
    c001: np.ndarray
    c010: np.ndarray
    c100: np.ndarray
    c0000: np.ndarray


def shapes1(g, rho):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    return [(v0, n0), (v1, n1), (v1, n0, n0)]


def shapes2(g, rho):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    return [(v0, n1), (v0, n0, n0), (v1, n0, n1), (v1, n1, n0), (v1, n0, n0, n0)]


def shapes3(g, rho):
    n0, n1, v0, v1 = g.dim0, g.dim1, rho.dimV0, rho.dimV1
    return [(v0, n0, n1), (v0, n1, n0), (v1, n1, n1), (v0, n0, n0, n0),
            (v1, n0, n0, n1), (v1, n0, n1, n0), (v1, n1, n0, n0), (v1, n0, n0, n0, n0)]


_KINDS = {1: (Cochain1, shapes1), 2: (Cochain2, shapes2), 3: (Cochain3, shapes3)}


def dim_cochains(g, rho, k):
    return sum(int(np.prod(s)) for s in _KINDS[k][1](g, rho))


def zero_cochain(g, rho, k):
    cls, sh = _KINDS[k]
    return cls(*[zeros(*s) for s in sh(g, rho)])


def unflatten(g, rho, k, column):
    cls, sh = _KINDS[k]
    column = np.asarray(column, dtype=object).reshape(-1)
    sizes = [int(np.prod(s)) for s in sh(g, rho)]
    if column.size != sum(sizes):
        raise ShapeError("length mismatch: %d vs %d" % (column.size, sum(sizes)))
    parts, at = [], 0
    for s, n in zip(sh(g, rho), sizes):
        parts.append(q(column[at:at + n]).reshape(s) if n else zeros(*s))
        at += n
    return cls(*parts)


def cochain(g, rho, k, **components):
    """Cochain of degree k with the named components set and the rest zero."""
    cls, sh = _KINDS[k]
    names = [f.name for f in fields(cls)]
    unknown = set(components) - set(names)
    if unknown:
        raise ShapeError("unknown components: %s" % sorted(unknown))
    from .structure import as_tensor
    parts = [zeros(*s) if components.get(n) is None else as_tensor(components[n], s)
             for n, s in zip(names, sh(g, rho))]
    return cls(*parts)


def d1(g, rho, lam, ein=ein):
    """D1 of a 1-cochain."""
    d, b00, b01, b10, l3 = g.tensors()
    P = rho.partial
    L0, L1, L2 = lam.phi0, lam.phi1, lam.chi
    psi = ein('ok,ka->oa', P, L1) - ein('oj,ja->oa', L0, d)
    omega = (ein('oxk,ky->oxy', rho.l0_0, L0) + ein('oyk,kx->oxy', rho.r0_0, L0)
             - ein('oj,jxy->oxy', L0, b00) + ein('ok,kxy->oxy', P, L2))
    mu = (ein('oxk,ka->oxa', rho.l0_1, L1) + ein('oak,kx->oxa', rho.r1, L0)
          - ein('oj,jxa->oxa', L1, b01) + ein('oxj,ja->oxa', L2, d))
    nu = (ein('oak,kx->oax', rho.l1, L0) + ein('oxk,ka->oax', rho.r0_1, L1)
          - ein('oj,jax->oax', L1, b10) + ein('ojx,ja->oax', L2, d))
    theta = (ein('oxk,kyz->oxyz', rho.l0_1, L2) - ein('ozk,kxy->oxyz', rho.r0_1, L2)
             - ein('oyk,kxz->oxyz', rho.l0_1, L2) - ein('oj,jxyz->oxyz', L1, l3)
             - ein('oxyk,kz->oxyz', rho.l2, L0) - ein('oxzk,ky->oxyz', rho.m2, L0)
             - ein('oyzk,kx->oxyz', rho.r2, L0) + ein('oxj,jyz->oxyz', L2, b00)
             - ein('ojz,jxy->oxyz', L2, b00) - ein('oyj,jxz->oxyz', L2, b00))
    return Cochain2(psi, omega, mu, nu, theta)


def d2(g, rho, c, ein=ein):
    """D2 of a 2-cochain: the left-hand sides of the eight cocycle families."""
    d, b00, b01, b10, l3 = g.tensors()
    P = rho.partial
    L00, L01, R00, R01 = rho.l0_0, rho.l0_1, rho.r0_0, rho.r0_1
    L1, R1, L2, M2, R2 = rho.l1, rho.r1, rho.l2, rho.m2, rho.r2
    psi, om, mu, nu, th = c.parts()
    c01 = (ein('oxk,ka->oxa', L00, psi) - ein('oj,jxa->oxa', psi, b01)
           + ein('oxj,ja->oxa', om, d) - ein('ok,kxa->oxa', P, mu))
    c10 = (ein('oxk,ka->oax', R00, psi) - ein('oj,jax->oax', psi, b10)
           + ein('ojx,ja->oax', om, d) - ein('ok,kax->oax', P, nu))
    c11 = (ein('oak,kb->oab', L1, psi) + ein('oaj,jb->oab', nu, d)
           - ein('obk,ka->oab', R1, psi) - ein('ojb,ja->oab', mu, d))
    c000 = (ein('oxk,kyz->oxyz', L00, om) - ein('ozk,kxy->oxyz', R00, om)
            - ein('oyk,kxz->oxyz', L00, om) + ein('oxj,jyz->oxyz', om, b00)
            - ein('ojz,jxy->oxyz', om, b00) - ein('oyj,jxz->oxyz', om, b00)
            - ein('ok,kxyz->oxyz', P, th) - ein('oj,jxyz->oxyz', psi, l3))
    # r1(a) acts on omega(x,y), the only typed reading of this term
    c001 = (ein('oxk,kya->oxya', L01, mu) - ein('oak,kxy->oxya', R1, om)
            - ein('oyk,kxa->oxya', L01, mu) + ein('oxj,jya->oxya', mu, b01)
            - ein('oja,jxy->oxya', mu, b00) - ein('oyj,jxa->oxya', mu, b01)
            - ein('oxyj,ja->oxya', th, d) + ein('oxyk,ka->oxya', L2, psi))
    # r0(y) acts on mu(x,a)
    c010 = (ein('oxk,kay->oxay', L01, nu) - ein('oyk,kxa->oxay', R01, mu)
            - ein('oak,kxy->oxay', L1, om) + ein('oxj,jay->oxay', mu, b10)
            - ein('ojy,jxa->oxay', nu, b01) - ein('oaj,jxy->oxay', nu, b00)
            - ein('oxjy,ja->oxay', th, d) + ein('oxyk,ka->oxay', M2, psi))
    # r0(y) acts on nu(a,x)
    c100 = (ein('oak,kxy->oaxy', L1, om) - ein('oyk,kax->oaxy', R01, nu)
            - ein('oxk,kay->oaxy', L01, nu) + ein('oaj,jxy->oaxy', nu, b00)
            - ein('ojy,jax->oaxy', nu, b10) - ein('oxj,jay->oaxy', mu, b10)
            - ein('ojxy,ja->oaxy', th, d) + ein('oxyk,ka->oaxy', R2, psi))
    # the mu/nu(l3) terms carry the sign forced by D2 D1 = 0
    c0000 = (ein('oxk,kyzt->oxyzt', L01, th) - ein('oyk,kxzt->oxyzt', L01, th)
             + ein('ozk,kxyt->oxyzt', L01, th) + ein('otk,kxyz->oxyzt', R01, th)
             - ein('ojzt,jxy->oxyzt', th, b00) - ein('oyjt,jxz->oxyzt', th, b00)
             - ein('oyzj,jxt->oxyzt', th, b00) + ein('oxjt,jyz->oxyzt', th, b00)
             + ein('oxzj,jyt->oxyzt', th, b00) - ein('oxyj,jzt->oxyzt', th, b00)
             + ein('oxj,jyzt->oxyzt', mu, l3) - ein('oyj,jxzt->oxyzt', mu, l3)
             + ein('ozj,jxyt->oxyzt', mu, l3) + ein('ojt,jxyz->oxyzt', nu, l3)
             + ein('oztk,kxy->oxyzt', R2, om) + ein('oytk,kxz->oxyzt', M2, om)
             + ein('oyzk,kxt->oxyzt', L2, om) - ein('oxtk,kyz->oxyzt', M2, om)
             - ein('oxzk,kyt->oxyzt', L2, om) + ein('oxyk,kzt->oxyzt', L2, om))
    return Cochain3(c01, c10, c11, c000, c001, c010, c100, c0000)


def _integral(arrays):
    """Common denominator and int64 copies of exact arrays, or None on overflow risk."""
    den = lcm(1, *(v.denominator for a in arrays for v in a.reshape(-1)))
    ints = [np.array([int(v * den) for v in a.reshape(-1)], dtype=object).reshape(a.shape)
            for a in arrays]
    big = max([abs(v) for a in ints for v in a.reshape(-1)] + [1])
    if big * 10 ** 6 > 2 ** 62:
        return None
    return den, [a.astype(np.int64) for a in ints]


def _matrix(g, rho, k, op):
    n = dim_cochains(g, rho, k)
    rows = dim_cochains(g, rho, k + 1)
    cls, sh = _KINDS[k]
    # each term pairs one structure tensor with one cochain component, so the
    # matrix can be computed on integers and divided by the common denominator
    blocks = rho.blocks()
    scaled = _integral(list(g.tensors()) + list(blocks.values()))
    if scaled is None:
        out = zeros(rows, n)
        for j in range(n):
            e = zeros(n)
            e[j] = 1
            out[:, j] = op(g, rho, unflatten(g, rho, k, e)).flat()
        return out
    den, ints = scaled
    gi = Leibniz2Algebra(*ints[:5])
    ri = type(rho)(**dict(zip(blocks, ints[5:])))
    if n == 0 or rows == 0:
        return zeros(rows, n)
    # all basis cochains at once, on a leading batch axis
    basis = np.eye(n, dtype=np.int64)
    parts, at = [], 0
    for x in sh(g, rho):
        m = int(np.prod(x))
        parts.append(basis[:, at:at + m].reshape((n,) + tuple(x)))
        at += m
    res = op(gi, ri, cls(*parts), ein=batched(*parts))
    out = np.concatenate([np.asarray(p).reshape(n, -1) for p in res.parts()], axis=1).T
    return q(out.astype(object)) / den


def d1_matrix(g, rho):
    check_shapes(rho, g)
    return _matrix(g, rho, 1, d1)


def d2_matrix(g, rho):
    check_shapes(rho, g)
    return _matrix(g, rho, 2, d2)


def is_cocycle2(c, g, rho):
    """(True, None) for a cocycle, otherwise (False, residual Cochain3)."""
    r = d2(g, rho, c)
    return (True, None) if r.is_zero() else (False, r)


def chi_free_columns(g, rho):
    """Indices of 1-cochain coordinates outside the chi component."""
    s = shapes1(g, rho)
    return list(range(int(np.prod(s[0])) + int(np.prod(s[1]))))


def theta_coords(g, rho):
    s = shapes2(g, rho)
    start = sum(int(np.prod(x)) for x in s[:4])
    return list(range(start, start + int(np.prod(s[4]))))


@dataclass
class CohomologySummary:
    dimC1: int
    dimC2: int
    dimZ1: int
    dimZ2: int
    dimB2: int
    dimH2: int
    z1_basis: list
    z2_basis: list
    b2_basis: list
    h2_representatives: list


class Cohomology:
    """D1, D2 and normal forms of 2-cochains modulo coboundaries for one (g, rho).

    With strict=True the chi component of 1-cochains is held at zero and
    2-cocycles must have theta = 0; that is the setting of strict
    homomorphisms between strict algebras.
    """

    def __init__(self, g, rho, strict=False):
        self.g, self.rho, self.strict = g, rho, strict
        self.D1 = d1_matrix(g, rho)
        self.D2 = d2_matrix(g, rho)
        if strict:
            self.cols = chi_free_columns(g, rho)
            self.D1s = self.D1[:, self.cols] if self.cols else zeros(self.D1.shape[0], 0)
            tc = theta_coords(g, rho)
            proj = zeros(len(tc), self.D2.shape[1])
            for i, c in enumerate(tc):
                proj[i, c] = 1
            self.Z2op = np.concatenate([self.D2, proj], axis=0)
        else:
            self.cols = list(range(self.D1.shape[1]))
            self.D1s = self.D1
            self.Z2op = self.D2
        red, piv = rref(self.D1s.T)
        self.b2_basis = [red[i].copy() for i in range(len(piv))]
        self.reducer = Reducer(self.b2_basis, self.D1.shape[0])

    def lift(self, x):
        """Full 1-cochain coordinates from a solution over the used columns."""
        full = zeros(self.D1.shape[1])
        for i, c in enumerate(self.cols):
            full[c] = x[i]
        return unflatten(self.g, self.rho, 1, full)

    def solve_coboundary(self, c):
        """A 1-cochain lam with D1 lam = c, or None."""
        x = solve(self.D1s, c.flat())
        return None if x is None else self.lift(x)

    def normal_form(self, c):
        return self.reducer.reduce(c.flat())

    def summary(self):
        n1 = self.D1.shape[1]
        z1 = kernel_basis(self.D1s)
        z1 = [self.lift(v).flat() for v in z1]
        z2 = kernel_basis(self.Z2op)
        reduced = [self.reducer.reduce(z) for z in z2]
        if reduced:
            red, piv = rref(np.stack(reduced, axis=0))
            h2 = [red[i].copy() for i in range(len(piv))]
        else:
            h2 = []
        assert len(h2) == len(z2) - len(self.b2_basis)
        return CohomologySummary(
            dimC1=n1, dimC2=self.D1.shape[0], dimZ1=len(z1), dimZ2=len(z2),
            dimB2=len(self.b2_basis), dimH2=len(h2), z1_basis=z1, z2_basis=z2,
            b2_basis=self.b2_basis, h2_representatives=h2)


def cohomology(g, rho, strict=False):
    return Cohomology(g, rho, strict).summary()


def class_difference_is_coboundary(c1, c2, g, rho):
    """lam with D1 lam = c1 - c2, or None when the classes differ."""
    for c in (c1, c2):
        if not is_cocycle2(c, g, rho)[0]:
            raise NotCocycle("argument is not a 2-cocycle")
    x = solve(d1_matrix(g, rho), (c1 - c2).flat())
    return None if x is None else unflatten(g, rho, 1, x)


def is_1cocycle(lam, g, rho):
    return d1(g, rho, lam).is_zero()


# Loday-Pirashvili complex of a plain Leibniz algebra

@dataclass(frozen=True, eq=False)
class Bimodule:
    """left (M, n, M): x.m   right (M, n, M): m.x"""
    left: np.ndarray
    right: np.ndarray

    @property
    def dim(self):
        return self.left.shape[0]


class InvalidBimodule(ValueError):
    pass


def check_bimodule(b, M):
    L, R = M.left, M.right
    return [
        ("LLM", ein('ojm,jxy->oxym', L, b) - ein('oxk,kym->oxym', L, L)
         + ein('oyk,kxm->oxym', L, L)),
        ("LML", ein('ojm,jxy->oxym', R, b) - ein('oyk,kxm->oxym', R, R)
         - ein('oxk,kym->oxym', L, R)),
        ("MLL", ein('ojm,jxy->oxym', R, b) - ein('oxk,kym->oxym', L, R)
         + ein('oyk,kxm->oxym', R, L)),
    ]


def verify_bimodule(b, M):
    from .leib2 import collect
    return collect(check_bimodule(b, M))


_LETTERS = "abcdefghijlmnpqrstuvwxy"


def _dL_apply(b, M, n, f):
    """d_L on a batch of n-cochains f of shape (batch, M, g^n)."""
    xs = _LETTERS[:n + 1]
    out_idx = "Ko" + xs
    res = np.zeros([f.shape[0], M.dim] + [b.shape[0]] * (n + 1), dtype=f.dtype)
    for i in range(n):
        rest = xs[:i] + xs[i + 1:]
        res = res + (-1) ** i * ein('o%sk,Kk%s->%s' % (xs[i], rest, out_idx), M.left, f)
    res = res + (-1) ** (n + 1) * ein('o%sk,Kk%s->%s' % (xs[n], xs[:n], out_idx), M.right, f)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            args = xs[:i] + xs[i + 1:j] + "Z" + xs[j + 1:]
            res = res + (-1) ** (i + 1) * ein('Ko%s,Z%s%s->%s' % (args, xs[i], xs[j], out_idx),
                                              f, b)
    return res


def dL_matrix(g, M, n):
    """Matrix of d_L: C^n -> C^(n+1) for a plain Leibniz algebra g (dim g1 = 0)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if g.dim1 != 0:
        raise ValueError("d_L is defined for plain Leibniz algebras (dim g1 = 0)")
    if verify_bimodule(g.b00, M):
        raise InvalidBimodule("actions violate LLM/LML/MLL")
    k = g.dim0
    cols = M.dim * k ** n
    ts = [q(g.b00), q(M.left), q(M.right)]
    den = lcm(1, *(v.denominator for t in ts for v in t.reshape(-1)))
    ints = [np.array([int(v * den) for v in t.reshape(-1)], dtype=object).reshape(t.shape)
            for t in ts]
    big = max([abs(v) for t in ints for v in t.reshape(-1)] + [1])
    if big * (n + 2) ** 2 * max(k, M.dim) < 2 ** 62:
        # every term is linear in one structure tensor, so integer arithmetic is exact
        ints = [t.astype(np.int64) for t in ints]
        basis = np.eye(cols, dtype=np.int64).reshape([cols, M.dim] + [k] * n)
    else:
        basis = np.eye(cols, dtype=int).astype(object).reshape([cols, M.dim] + [k] * n)
    res = _dL_apply(ints[0], Bimodule(ints[1], ints[2]), n, basis)
    return q(np.asarray(res, dtype=object).reshape(cols, -1).T) / den


def trivial_bimodule(g, dim):
    return Bimodule(zeros(dim, g.dim0, dim), zeros(dim, g.dim0, dim))


def adjoint_bimodule(g):
    return Bimodule(g.b00.copy(), g.b00.transpose(0, 2, 1).copy())
