"""Two-term complexes and multilinear maps stored as structure constants.

A multilinear map with k inputs is a tensor of shape (out, in_1, ..., in_k).
Flattening is numpy's row-major order on that tensor: output index
major, then the inputs in signature order.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .exactla import q, zeros

_q = np.frompyfunc(Fraction, 1, 1)


class ShapeError(ValueError):
    pass


def _scaled(a):
    den = lcm(1, *(v.denominator for v in a.reshape(-1)))
    ints = [v.numerator * (den // v.denominator) for v in a.reshape(-1)]
    return den, ints


def ein(spec, *ops):
    """einsum over exact object arrays.

    Contractions run on int64 after clearing denominators when the result
    provably fits; otherwise the object arrays are contracted directly.
    """
    if all(getattr(a, "dtype", None) == object for a in ops):
        inputs = spec.split("->")[0].split(",")
        sizes = {}
        for term, a in zip(inputs, ops):
            sizes.update(zip(term, a.shape))
        work = int(np.prod(list(sizes.values()))) if sizes else 0
        if work:
            scaled = [_scaled(a) for a in ops]
            bound = work
            for _, ints in scaled:
                bound *= max([abs(v) for v in ints] + [1])
            if bound < 2 ** 62:
                args = [np.array(ints, dtype=np.int64).reshape(a.shape)
                        for (_, ints), a in zip(scaled, ops)]
                den = 1
                for d, _ in scaled:
                    den *= d
                out = np.einsum(spec, *args, optimize=False).astype(object)
                return _q(out) / den if den != 1 else _q(out)
    return np.einsum(spec, *ops, optimize=False)


def batched(*marked):
    """ein with a leading batch axis on the operands in marked (by identity) and the output."""
    ids = {id(a) for a in marked}

    def run(spec, *ops):
        ins, out = spec.split("->")
        k = next(c for c in "KLMNPQRSTUVW" if c not in spec)
        terms = [k + s if id(a) in ids else s for s, a in zip(ins.split(","), ops)]
        return ein(",".join(terms) + "->" + k + out, *ops)
    return run


def unit_batch(shapes):
    """The standard basis of a direct sum of tensor spaces, one batch per summand."""
    sizes = [int(np.prod(s)) for s in shapes]
    n = sum(sizes)
    basis = q(np.eye(n, dtype=int).astype(object)) if n else zeros(0, 0)
    out, at = [], 0
    for s, m in zip(shapes, sizes):
        out.append(basis[:, at:at + m].reshape((n,) + tuple(s)))
        at += m
    return n, out


def as_tensor(x, shape):
    """Exact tensor of the given shape; empty input stands for an empty tensor."""
    t = np.asarray(x, dtype=object)
    if t.size == 0:
        if int(np.prod(shape)) != 0:
            raise ShapeError("expected shape %s, got empty data" % (tuple(shape),))
        return zeros(*shape)
    t = q(t)
    if t.shape != tuple(shape):
        raise ShapeError("expected shape %s, got %s" % (tuple(shape), t.shape))
    return t


@dataclass(frozen=True)
class TwoTermComplex:
    """V1 --d--> V0; d has shape (dim0, dim1)."""
    dim1: int
    dim0: int
    d: np.ndarray

    def dim(self, grade):
        return self.dim0 if grade == 0 else self.dim1


def complex_of(dim1, dim0, d=None):
    d = zeros(dim0, dim1) if d is None else as_tensor(d, np.shape(d))
    c = TwoTermComplex(dim1, dim0, d)
    validate_complex(c)
    return c


def validate_complex(c):
    if c.dim0 < 0 or c.dim1 < 0:
        raise ShapeError("negative dimension")
    if c.d.shape != (c.dim0, c.dim1):
        raise ShapeError("d has shape %s, expected %s" % (c.d.shape, (c.dim0, c.dim1)))
    return True


@dataclass(frozen=True)
class MultiMap:
    """Multilinear map between graded slots of two-term complexes."""
    source: TwoTermComplex
    signature: tuple
    target: TwoTermComplex
    target_grade: int
    coeffs: np.ndarray

    def __post_init__(self):
        shape = (self.target.dim(self.target_grade),) + tuple(
            self.source.dim(g) for g in self.signature)
        if self.coeffs.shape != shape:
            raise ShapeError("coefficient tensor %s, expected %s" % (self.coeffs.shape, shape))

    def __eq__(self, other):
        return (isinstance(other, MultiMap) and self.signature == other.signature
                and self.target_grade == other.target_grade
                and self.coeffs.shape == other.coeffs.shape
                and bool(np.all(self.coeffs == other.coeffs)))

    __hash__ = None


def mm_eval(f, args):
    """Evaluate f on coordinate columns, one per slot."""
    if len(args) != len(f.signature):
        raise ShapeError("arity mismatch: %d args for %d slots" % (len(args), len(f.signature)))
    out = f.coeffs
    for k, (a, g) in enumerate(zip(args, f.signature)):
        a = np.asarray(a, dtype=object).reshape(-1)
        if len(a) != f.source.dim(g):
            raise ShapeError("slot %d expects dim %d, got %d" % (k, f.source.dim(g), len(a)))
    for a in reversed(args):
        out = np.tensordot(out, q(np.asarray(a, dtype=object).reshape(-1)), axes=([out.ndim - 1], [0]))
    return q(np.asarray(out, dtype=object).reshape(-1))


def flatten(f):
    return q(f.coeffs.reshape(-1))


def unflatten(like, column):
    column = np.asarray(column, dtype=object).reshape(-1)
    if column.size != like.coeffs.size:
        raise ShapeError("length mismatch: %d vs %d" % (column.size, like.coeffs.size))
    return MultiMap(like.source, like.signature, like.target, like.target_grade,
                    q(column).reshape(like.coeffs.shape) if column.size else zeros(*like.coeffs.shape))


def coords_roundtrip(f):
    return unflatten(f, flatten(f))


@dataclass(frozen=True)
class GradedMap:
    """Pair of matrices acting on degree 0 and degree 1."""
    m0: np.ndarray
    m1: np.ndarray

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.m0.shape == other.m0.shape
                and self.m1.shape == other.m1.shape
                and bool(np.all(self.m0 == other.m0)) and bool(np.all(self.m1 == other.m1)))

    __hash__ = None

    def compose(self, other):
        """self after other."""
        return GradedMap(dot(self.m0, other.m0), dot(self.m1, other.m1))


def dot(a, b):
    """Matrix product that tolerates empty operands."""
    if a.ndim == 2 and b.ndim == 2:
        return ein('ij,jk->ik', a, b)
    return ein('ij,j->i', a, b)
