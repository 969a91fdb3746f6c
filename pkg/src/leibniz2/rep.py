"""Representations of Leibniz 2-algebras on two-term complexes V1 --p--> V0.

Tensor layouts (o = output coordinate, v/m = input vector in V0/V1):

    partial   (V0, V1)
    l0_0 r0_0 (V0, g0, V0)      l0(x), r0(x) on V0
    l0_1 r0_1 (V1, g0, V1)      l0(x), r0(x) on V1
    l1 r1     (V1, g1, V0)
    l2 m2 r2  (V1, g0, g0, V0)

The conditions checked are exactly those that make the block sum
g + V with the brackets

    [x+u, y+v]  = [x,y] + l0(x)v + r0(y)u
    [x+u, a+m]  = [x,a] + l0(x)m + r1(a)u
    [a+m, x+u]  = [a,x] + l1(a)u + r0(x)m
    l3(x+u, y+v, z+w) = l3(x,y,z) - l2(x,y)w - m2(x,z)v - r2(y,z)u

a Leibniz 2-algebra.
"""
from dataclasses import dataclass, fields

import numpy as np

from .exactla import zeros
from .leib2 import collect
from .structure import ShapeError, TwoTermComplex, as_tensor, ein


@dataclass(frozen=True, eq=False)
class Representation:
    partial: np.ndarray
    l0_0: np.ndarray
    l0_1: np.ndarray
    r0_0: np.ndarray
    r0_1: np.ndarray
    l1: np.ndarray
    r1: np.ndarray
    l2: np.ndarray
    m2: np.ndarray
    r2: np.ndarray

    @property
    def dimV0(self):
        return self.partial.shape[0]

    @property
    def dimV1(self):
        return self.partial.shape[1]

    @property
    def V(self):
        return TwoTermComplex(self.dimV1, self.dimV0, self.partial)

    def blocks(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return False
        return all(a.shape == b.shape and bool(np.all(a == b))
                   for a, b in zip(self.blocks().values(), other.blocks().values()))

    __hash__ = None


def rep_shapes(n0, n1, v0, v1):
    return {"partial": (v0, v1), "l0_0": (v0, n0, v0), "l0_1": (v1, n0, v1),
            "r0_0": (v0, n0, v0), "r0_1": (v1, n0, v1), "l1": (v1, n1, v0),
            "r1": (v1, n1, v0), "l2": (v1, n0, n0, v0), "m2": (v1, n0, n0, v0),
            "r2": (v1, n0, n0, v0)}


def representation(g, dimV0, dimV1, **blocks):
    """Representation of g on a complex of the given dims; unset blocks are zero."""
    shapes = rep_shapes(g.dim0, g.dim1, dimV0, dimV1)
    unknown = set(blocks) - set(shapes)
    if unknown:
        raise ShapeError("unknown representation blocks: %s" % sorted(unknown))
    parts = {k: zeros(*s) if blocks.get(k) is None else as_tensor(blocks[k], s)
             for k, s in shapes.items()}
    return Representation(**parts)


def trivial_rep(g, dimV0, dimV1, partial=None):
    return representation(g, dimV0, dimV1, partial=partial)


def check_shapes(rho, g):
    want = rep_shapes(g.dim0, g.dim1, rho.dimV0, rho.dimV1)
    for k, s in want.items():
        if getattr(rho, k).shape != s:
            raise ShapeError("representation block %s has shape %s, expected %s"
                             % (k, getattr(rho, k).shape, s))


# End(V)

def endv_delta(A, partial):
    """delta(A) = (p A, A p) for A: V0 -> V1."""
    if A.shape != (partial.shape[1], partial.shape[0]):
        raise ShapeError("A must map V0 to V1")
    return (ein('ik,kj->ij', partial, A), ein('ik,kj->ij', A, partial))


def endv_bracket(X, Y):
    """Graded commutator on End(V).

    Degree-0 elements are pairs (X0, X1) with X0 on V0 and X1 on V1;
    degree-1 elements are single matrices V0 -> V1.
    """
    x0 = isinstance(X, tuple)
    y0 = isinstance(Y, tuple)
    if x0 and y0:
        return tuple(ein('ik,kj->ij', X[i], Y[i]) - ein('ik,kj->ij', Y[i], X[i]) for i in (0, 1))
    if x0:
        return ein('ik,kj->ij', X[1], Y) - ein('ik,kj->ij', Y, X[0])
    if y0:
        return -endv_bracket(Y, X)
    return zeros(*X.shape)


def check_representation(rho, g):
    check_shapes(rho, g)
    d, b00, b01, b10, l3 = g.tensors()
    P = rho.partial
    L00, L01, R00, R01 = rho.l0_0, rho.l0_1, rho.r0_0, rho.r0_1
    L1, R1, L2, M2, R2 = rho.l1, rho.r1, rho.l2, rho.m2, rho.r2

    def comm0(A, B):
        # [A(x), B(y)] on one grade, indexed (o, x, y, v)
        return ein('oxk,kyv->oxyv', A, B) - ein('oyk,kxv->oxyv', B, A)

    checks = [
        # End^0_p membership
        ("l0 chain", ein('oxk,km->oxm', L00, P) - ein('ok,kxm->oxm', P, L01)),
        ("r0 chain", ein('oxk,km->oxm', R00, P) - ein('ok,kxm->oxm', P, R01)),
        # l0(da) = delta l1(a), r0(da) = delta r1(a)
        ("l0(da) V0", ein('ojv,ja->oav', L00, d) - ein('ok,kav->oav', P, L1)),
        ("l0(da) V1", ein('ojm,ja->oam', L01, d) - ein('oak,km->oam', L1, P)),
        ("r0(da) V0", ein('ojv,ja->oav', R00, d) - ein('ok,kav->oav', P, R1)),
        ("r0(da) V1", ein('ojm,ja->oam', R01, d) - ein('oak,km->oam', R1, P)),
        # (2) l0[x,y] - [l0 x, l0 y] = delta l2(x,y)
        ("(2) LLM V0", ein('ojv,jxy->oxyv', L00, b00) - comm0(L00, L00)
         - ein('ok,kxyv->oxyv', P, L2)),
        ("(2) LLM V1", ein('ojv,jxy->oxyv', L01, b00) - comm0(L01, L01)
         - ein('oxyk,kv->oxyv', L2, P)),
        # (3) r0[x,y] - [l0 x, r0 y] = delta m2(x,y)
        ("(3) LML V0", ein('ojv,jxy->oxyv', R00, b00)
         - (ein('oxk,kyv->oxyv', L00, R00) - ein('oyk,kxv->oxyv', R00, L00))
         - ein('ok,kxyv->oxyv', P, M2)),
        ("(3) LML V1", ein('ojv,jxy->oxyv', R01, b00)
         - (ein('oxk,kyv->oxyv', L01, R01) - ein('oyk,kxv->oxyv', R01, L01))
         - ein('oxyk,kv->oxyv', M2, P)),
        # (4) r0[x,y] - l0(x)r0(y) - r0(y)r0(x) = -delta r2(x,y); this sign on r2
        # is the one for which the semidirect product satisfies the axioms
        ("(4) MLL V0", -ein('ojv,jxy->oxyv', R00, b00) + ein('oyk,kxv->oxyv', R00, R00)
         + ein('oxk,kyv->oxyv', L00, R00) - ein('ok,kxyv->oxyv', P, R2)),
        ("(4) MLL V1", -ein('ojv,jxy->oxyv', R01, b00) + ein('oyk,kxv->oxyv', R01, R01)
         + ein('oxk,kyv->oxyv', L01, R01) - ein('oxyk,kv->oxyv', R2, P)),
        # (5)-(10): l0, r0 act through g0 and l1, r1 through g1
        # (5) l1[x,a] - [l0 x, l1 a] = l2(x, da)
        ("(5) LLM", ein('ojv,jxa->oxav', L1, b01) - ein('oxk,kav->oxav', L01, L1)
         + ein('oak,kxv->oxav', L1, L00) - ein('oxjv,ja->oxav', L2, d)),
        # (6) r1[x,a] - [l0 x, r1 a] = m2(x, da)
        ("(6) LML", ein('ojv,jxa->oxav', R1, b01) - ein('oxk,kav->oxav', L01, R1)
         + ein('oak,kxv->oxav', R1, L00) - ein('oxjv,ja->oxav', M2, d)),
        # (7) r1[x,a] - l0(x)r1(a) - r1(a)r0(x) = -r2(x, da), r2 sign as in (4)
        ("(7) MLL", -ein('ojv,jxa->oxav', R1, b01) + ein('oak,kxv->oxav', R1, R00)
         + ein('oxk,kav->oxav', L01, R1) - ein('oxjv,ja->oxav', R2, d)),
        # (8) l1[a,x] - [l1 a, l0 x] = l2(da, x)
        ("(8) LLM", ein('ojv,jax->oaxv', L1, b10) - ein('oak,kxv->oaxv', L1, L00)
         + ein('oxk,kav->oaxv', L01, L1) - ein('ojxv,ja->oaxv', L2, d)),
        # (9) r1[a,x] - [l1 a, r0 x] = m2(da, x)
        ("(9) LML", ein('ojv,jax->oaxv', R1, b10) - ein('oak,kxv->oaxv', L1, R00)
         + ein('oxk,kav->oaxv', R01, L1) - ein('ojxv,ja->oaxv', M2, d)),
        # (10) r1[a,x] - l1(a)r0(x) - r0(x)r1(a) = -r2(da, x), r2 sign as in (4)
        ("(10) MLL", -ein('ojv,jax->oaxv', R1, b10) + ein('oxk,kav->oaxv', R01, R1)
         + ein('oak,kxv->oaxv', L1, R00) - ein('ojxv,ja->oaxv', R2, d)),
    ]

    # Jacobiator, fibre element in the last slot
    j11 = (ein('oxk,kyzv->oxyzv', L01, L2) - ein('oyzk,kxv->oxyzv', L2, L00)
           - ein('oyk,kxzv->oxyzv', L01, L2) + ein('oxzk,kyv->oxyzv', L2, L00)
           + ein('ozk,kxyv->oxyzv', L01, L2) - ein('oxyk,kzv->oxyzv', L2, L00)
           + ein('oxjv,jyz->oxyzv', L2, b00) - ein('ojzv,jxy->oxyzv', L2, b00)
           - ein('oyjv,jxz->oxyzv', L2, b00) - ein('ojv,jxyz->oxyzv', L1, l3))
    # fibre element in the third slot
    j12 = (ein('oxk,kytv->oxytv', L01, M2) - ein('oytk,kxv->oxytv', M2, L00)
           - ein('oyk,kxtv->oxytv', L01, M2) + ein('oxtk,kyv->oxytv', M2, L00)
           - ein('oxyk,ktv->oxytv', L2, R00) + ein('otk,kxyv->oxytv', R01, L2)
           + ein('oxjv,jyt->oxytv', M2, b00) - ein('ojtv,jxy->oxytv', M2, b00)
           - ein('oyjv,jxt->oxytv', M2, b00) - ein('ojv,jxyt->oxytv', R1, l3))
    # fibre element in the second slot
    jy = (-ein('oxk,kztv->oxztv', L01, R2) - ein('ojv,jxzt->oxztv', R1, l3)
          - ein('ozk,kxtv->oxztv', L01, M2) - ein('otk,kxzv->oxztv', R01, M2)
          + ein('oztk,kxv->oxztv', R2, L00) + ein('ojtv,jxz->oxztv', R2, b00)
          + ein('ozjv,jxt->oxztv', R2, b00) - ein('oxtk,kzv->oxztv', M2, R00)
          - ein('oxzk,ktv->oxztv', L2, R00) + ein('oxjv,jzt->oxztv', M2, b00))
    # fibre element in the first slot
    jx = (ein('ojv,jyzt->oyztv', R1, l3) + ein('oyk,kztv->oyztv', L01, R2)
          - ein('ozk,kytv->oyztv', L01, R2) - ein('otk,kyzv->oyztv', R01, R2)
          + ein('oztk,kyv->oyztv', R2, R00) + ein('oytk,kzv->oyztv', M2, R00)
          + ein('oyzk,ktv->oyztv', L2, R00) - ein('ojtv,jyz->oyztv', R2, b00)
          - ein('ozjv,jyt->oyztv', R2, b00) + ein('oyjv,jzt->oyztv', R2, b00))
    checks += [("(11) l3-compatibility", j11), ("(12) l3-compatibility", j12),
               ("l3-compatibility, fibre in the middle slot", jy),
               ("l3-compatibility, fibre in the first slot", jx)]
    return checks


def verify_representation(rho, g):
    """Empty list iff rho is a representation of g."""
    return collect(check_representation(rho, g))


def adjoint_rep(g):
    d, b00, b01, b10, l3 = g.tensors()
    return Representation(
        partial=d.copy(),
        l0_0=b00.copy(),
        l0_1=b01.copy(),
        r0_0=b00.transpose(0, 2, 1).copy(),
        r0_1=b10.transpose(0, 2, 1).copy(),
        l1=b10.copy(),
        r1=b01.transpose(0, 2, 1).copy(),
        l2=-l3,
        m2=-l3.transpose(0, 1, 3, 2),
        r2=-l3.transpose(0, 2, 3, 1),
    )
