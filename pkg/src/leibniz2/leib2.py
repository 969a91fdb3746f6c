"""Leibniz 2-algebras, their homomorphisms and degree-0 derivations.

Structure constants, with n0 = dim g0 and n1 = dim g1:

    d    (n0, n1)          d: g1 -> g0
    b00  (n0, n0, n0)      [x, y]
    b01  (n1, n0, n1)      [x, a]
    b10  (n1, n1, n0)      [a, x]
    l3   (n1, n0, n0, n0)  l3(x, y, z)

Every axiom is evaluated as a residual tensor over all basis tuples at
once; multilinearity makes that a complete check.
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from .exactla import eye, inverse, is_invertible, is_zero, q, zeros
from .structure import MultiMap, ShapeError, TwoTermComplex, as_tensor, ein


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: tuple
    residual: tuple

    def as_dict(self):
        return {"axiom": self.axiom, "index": list(self.index),
                "residual": [str(v) for v in self.residual]}


def violations(label, res):
    """Violations of one residual tensor (output axis first)."""
    out = []
    res = np.asarray(res, dtype=object)
    if res.ndim == 0 or res.shape[0] == 0:
        return out
    for idx in product(*(range(n) for n in res.shape[1:])):
        col = res[(slice(None),) + idx]
        if any(v != 0 for v in col):
            out.append(Violation(label, idx, tuple(q(v) for v in col)))
    return out


def collect(checks):
    out = []
    for label, res in checks:
        out.extend(violations(label, res))
    return out


@dataclass(frozen=True, eq=False)
class Leibniz2Algebra:
    d: np.ndarray
    b00: np.ndarray
    b01: np.ndarray
    b10: np.ndarray
    l3: np.ndarray

    @property
    def dim0(self):
        return self.d.shape[0]

    @property
    def dim1(self):
        return self.d.shape[1]

    @property
    def g(self):
        return TwoTermComplex(self.dim1, self.dim0, self.d)

    def bracket(self, name):
        """The named structure map as a MultiMap."""
        sig, tg = {"b00": ((0, 0), 0), "b01": ((0, 1), 1),
                   "b10": ((1, 0), 1), "l3": ((0, 0, 0), 1)}[name]
        return MultiMap(self.g, sig, self.g, tg, getattr(self, name))

    def __eq__(self, other):
        return isinstance(other, Leibniz2Algebra) and all(
            a.shape == b.shape and bool(np.all(a == b))
            for a, b in zip(self.tensors(), other.tensors()))

    __hash__ = None

    def tensors(self):
        return (self.d, self.b00, self.b01, self.b10, self.l3)


def algebra(dim0, dim1, d=None, b00=None, b01=None, b10=None, l3=None):
    """Build an algebra from (possibly partial) structure constants; unset maps are zero."""
    n0, n1 = dim0, dim1
    shapes = {"d": (n0, n1), "b00": (n0, n0, n0), "b01": (n1, n0, n1),
              "b10": (n1, n1, n0), "l3": (n1, n0, n0, n0)}
    given = {"d": d, "b00": b00, "b01": b01, "b10": b10, "l3": l3}
    parts = {}
    for k, shape in shapes.items():
        v = given[k]
        parts[k] = zeros(*shape) if v is None else as_tensor(v, shape)
    return Leibniz2Algebra(**parts)


def check_algebra(g):
    d, b00, b01, b10, l3 = g.tensors()
    return [
        ("a", ein('ib,bxa->ixa', d, b01) - ein('ixj,ja->ixa', b00, d)),
        ("b", ein('ib,bax->iax', d, b10) - ein('ijx,ja->iax', b00, d)),
        ("c", ein('ojb,ja->oab', b01, d) - ein('oaj,jb->oab', b10, d)),
        # (d)-(g) report Leibniz-side minus l3-side
        ("d", ein('ixj,jyz->ixyz', b00, b00) - ein('ijz,jxy->ixyz', b00, b00)
         - ein('iyj,jxz->ixyz', b00, b00) - ein('ia,axyz->ixyz', d, l3)),
        ("e", ein('oxj,jya->oxya', b01, b01) - ein('oja,jxy->oxya', b01, b00)
         - ein('oyj,jxa->oxya', b01, b01) - ein('oxyj,ja->oxya', l3, d)),
        ("f", ein('oxj,jay->oxay', b01, b10) - ein('ojy,jxa->oxay', b10, b01)
         - ein('oaj,jxy->oxay', b10, b00) - ein('oxjy,ja->oxay', l3, d)),
        ("g", ein('oaj,jxy->oaxy', b10, b00) - ein('ojy,jax->oaxy', b10, b10)
         - ein('oxj,jay->oaxy', b01, b10) - ein('ojxy,ja->oaxy', l3, d)),
        ("h", ein('oxj,jyzt->oxyzt', b01, l3) - ein('oyj,jxzt->oxyzt', b01, l3)
         + ein('ozj,jxyt->oxyzt', b01, l3) + ein('ojt,jxyz->oxyzt', b10, l3)
         - ein('ojzt,jxy->oxyzt', l3, b00) - ein('oyjt,jxz->oxyzt', l3, b00)
         - ein('oyzj,jxt->oxyzt', l3, b00) + ein('oxjt,jyz->oxyzt', l3, b00)
         + ein('oxzj,jyt->oxyzt', l3, b00) - ein('oxyj,jzt->oxyzt', l3, b00)),
    ]


def verify_algebra(g):
    """Empty list iff axioms (a)-(h) hold; otherwise one Violation per failing basis tuple."""
    return collect(check_algebra(g))


def is_strict(g):
    return is_zero(g.l3)


# homomorphisms

@dataclass(frozen=True, eq=False)
class Hom2:
    F0: np.ndarray
    F1: np.ndarray
    F2: np.ndarray

    def __eq__(self, other):
        return isinstance(other, Hom2) and all(
            a.shape == b.shape and bool(np.all(a == b))
            for a, b in ((self.F0, other.F0), (self.F1, other.F1), (self.F2, other.F2)))

    __hash__ = None


def _arr(x):
    a = np.asarray(x, dtype=object)
    return q(a) if a.size else zeros(*a.shape)


def hom(F0, F1, F2=None):
    F0, F1 = _arr(F0), _arr(F1)
    shape = (F1.shape[0], F0.shape[1], F0.shape[1])
    F2 = zeros(*shape) if F2 is None else as_tensor(F2, shape)
    return Hom2(F0, F1, F2)


def identity_hom(g):
    return Hom2(eye(g.dim0), eye(g.dim1), zeros(g.dim1, g.dim0, g.dim0))


def _check_hom_shapes(F, g, h):
    if (F.F0.shape != (h.dim0, g.dim0) or F.F1.shape != (h.dim1, g.dim1)
            or F.F2.shape != (h.dim1, g.dim0, g.dim0)):
        raise ShapeError("homomorphism shapes do not match the algebras")


def check_hom(F, g, h):
    _check_hom_shapes(F, g, h)
    F0, F1, F2 = F.F0, F.F1, F.F2
    return [
        ("i", ein('ij,ja->ia', F0, g.d) - ein('ij,ja->ia', h.d, F1)),
        ("j", ein('oj,jxy->oxy', F0, g.b00) - ein('ojk,jx,ky->oxy', h.b00, F0, F0)
         - ein('oj,jxy->oxy', h.d, F2)),
        ("k", ein('oj,jxa->oxa', F1, g.b01) - ein('ojk,jx,ka->oxa', h.b01, F0, F1)
         - ein('oxj,ja->oxa', F2, g.d)),
        ("l", ein('oj,jax->oax', F1, g.b10) - ein('ojk,ja,kx->oax', h.b10, F1, F0)
         - ein('ojx,ja->oax', F2, g.d)),
        ("m", ein('oj,jxyz->oxyz', F1, g.l3) - ein('oijk,ix,jy,kz->oxyz', h.l3, F0, F0, F0)
         - (ein('oxj,jyz->oxyz', F2, g.b00) - ein('ojz,jxy->oxyz', F2, g.b00)
            - ein('oyj,jxz->oxyz', F2, g.b00) + ein('oij,ix,jyz->oxyz', h.b01, F0, F2)
            - ein('oji,jxy,iz->oxyz', h.b10, F2, F0) - ein('oij,iy,jxz->oxyz', h.b01, F0, F2))),
    ]


def verify_hom(F, g, h):
    """Empty list iff F: g -> h satisfies (i)-(m)."""
    return collect(check_hom(F, g, h))


def compose_hom(G, F):
    """G after F; the quadratic part is G2(F0 x, F0 y) + G1 F2(x, y)."""
    if G.F0.shape[1] != F.F0.shape[0] or G.F1.shape[1] != F.F1.shape[0]:
        raise ShapeError("dim mismatch in composition")
    return Hom2(ein('ij,jk->ik', G.F0, F.F0), ein('ij,jk->ik', G.F1, F.F1),
                ein('oij,ix,jy->oxy', G.F2, F.F0, F.F0) + ein('oj,jxy->oxy', G.F1, F.F2))


def is_iso(F):
    return is_invertible(F.F0) and is_invertible(F.F1)


def inverse_hom(F):
    S0, S1 = inverse(F.F0), inverse(F.F1)
    return Hom2(S0, S1, -ein('oj,jik,ix,ky->oxy', S1, F.F2, S0, S0))


def transport(g, T):
    """The algebra structure on the same spaces that makes T: g -> result a homomorphism.

    T must be invertible in both degrees.  With T2 = 0 this is plain
    conjugation of all structure maps.
    """
    S0, S1 = inverse(T.F0), inverse(T.F1)
    T0, T1, T2 = T.F0, T.F1, T.F2
    d = ein('ij,ja,ab->ib', T0, g.d, S1)
    # brackets in source coordinates, then pulled back along S0, S1
    b00 = (ein('oi,ixy->oxy', T0, g.b00) - ein('oj,jxy->oxy', d, T2))
    b00 = ein('oxy,xX,yY->oXY', b00, S0, S0)
    b01 = ein('oj,jxa->oxa', T1, g.b01) - ein('oxj,ja->oxa', T2, g.d)
    b01n = ein('oxa,xX,aA->oXA', b01, S0, S1)
    b10 = ein('oj,jax->oax', T1, g.b10) - ein('ojx,ja->oax', T2, g.d)
    b10n = ein('oax,aA,xX->oAX', b10, S1, S0)
    l3 = (ein('oj,jxyz->oxyz', T1, g.l3)
          - (ein('oxj,jyz->oxyz', T2, g.b00) - ein('ojz,jxy->oxyz', T2, g.b00)
             - ein('oyj,jxz->oxyz', T2, g.b00)
             + ein('oij,ix,jyz->oxyz', b01n, T0, T2)
             - ein('oji,jxy,iz->oxyz', b10n, T2, T0)
             - ein('oij,iy,jxz->oxyz', b01n, T0, T2)))
    l3 = ein('oxyz,xX,yY,zZ->oXYZ', l3, S0, S0, S0)
    return Leibniz2Algebra(d, b00, b01n, b10n, l3)


# derivations

@dataclass(frozen=True, eq=False)
class Derivation2:
    D0: np.ndarray
    D1: np.ndarray
    D2: np.ndarray

    def __eq__(self, other):
        return isinstance(other, Derivation2) and all(
            a.shape == b.shape and bool(np.all(a == b))
            for a, b in ((self.D0, other.D0), (self.D1, other.D1), (self.D2, other.D2)))

    __hash__ = None

    def __add__(self, other):
        return Derivation2(self.D0 + other.D0, self.D1 + other.D1, self.D2 + other.D2)


def derivation(D0, D1, D2=None):
    D0, D1 = _arr(D0), _arr(D1)
    shape = (D1.shape[0], D0.shape[0], D0.shape[0])
    D2 = zeros(*shape) if D2 is None else as_tensor(D2, shape)
    return Derivation2(D0, D1, D2)


def zero_derivation(g):
    return Derivation2(zeros(g.dim0, g.dim0), zeros(g.dim1, g.dim1), zeros(g.dim1, g.dim0, g.dim0))


def check_derivation(D, g):
    if (D.D0.shape != (g.dim0, g.dim0) or D.D1.shape != (g.dim1, g.dim1)
            or D.D2.shape != (g.dim1, g.dim0, g.dim0)):
        raise ShapeError("derivation shapes do not match the algebra")
    D0, D1, D2 = D.D0, D.D1, D.D2
    d, b00, b01, b10, l3 = g.tensors()
    return [
        ("D0d", ein('ij,ja->ia', D0, d) - ein('ij,ja->ia', d, D1)),
        ("n", ein('oj,jxy->oxy', D0, b00) - ein('ojy,jx->oxy', b00, D0)
         - ein('oxj,jy->oxy', b00, D0) - ein('oj,jxy->oxy', d, D2)),
        # (o) and (p) take values in g1, so the outer map is D1
        ("o", ein('oj,jxa->oxa', D1, b01) - ein('oja,jx->oxa', b01, D0)
         - ein('oxj,ja->oxa', b01, D1) - ein('oxj,ja->oxa', D2, d)),
        ("p", ein('oj,jax->oax', D1, b10) - ein('ojx,ja->oax', b10, D1)
         - ein('oaj,jx->oax', b10, D0) - ein('ojx,ja->oax', D2, d)),
        # linearization of (m) at the identity
        ("q", ein('oj,jxyz->oxyz', D1, l3) - ein('ojyz,jx->oxyz', l3, D0)
         - ein('oxjz,jy->oxyz', l3, D0) - ein('oxyj,jz->oxyz', l3, D0)
         - (ein('oxj,jyz->oxyz', D2, b00) - ein('ojz,jxy->oxyz', D2, b00)
            - ein('oyj,jxz->oxyz', D2, b00) + ein('oxj,jyz->oxyz', b01, D2)
            - ein('ojz,jxy->oxyz', b10, D2) - ein('oyj,jxz->oxyz', b01, D2))),
    ]


def verify_derivation(D, g):
    return collect(check_derivation(D, g))
