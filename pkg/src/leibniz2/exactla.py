"""Exact linear algebra over the rationals.

Matrices are 2-d numpy arrays of dtype object holding fractions.Fraction
entries; vectors are 1-d arrays of the same kind.  Elimination runs on
integer rows in a compiled kernel when it is available.
"""
import os
from fractions import Fraction
from math import lcm

import numpy as np

if os.environ.get("LEIBNIZ2_PURE"):
    from ._kernel_py import rref_int
    BACKEND = "python"
else:
    try:
        from ._kernel import rref_int
        BACKEND = "cython"
    except ImportError:
        from ._kernel_py import rref_int
        BACKEND = "python"

Scalar = Fraction
_q = np.frompyfunc(Fraction, 1, 1)


def q(x):
    """Canonical rational array (or scalar) from ints, strings or fractions."""
    if isinstance(x, np.ndarray):
        if x.size == 0:
            return np.empty(x.shape, dtype=object)
        return _q(x).astype(object)
    if isinstance(x, (list, tuple)):
        return q(np.array(x, dtype=object))
    return Fraction(x)


def zeros(*shape):
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def mat(rows, ncols=None):
    """Build a matrix from nested rows; ncols is needed when rows is empty."""
    rows = [list(r) for r in rows]
    if not rows:
        return zeros(0, ncols or 0)
    return q(np.array(rows, dtype=object).reshape(len(rows), -1))


def vec(xs):
    return q(np.array(list(xs), dtype=object).reshape(-1))


def is_zero(a):
    return all(v == 0 for v in np.asarray(a).reshape(-1))


def _int_rows(m):
    rows = []
    for r in m:
        dens = [v.denominator for v in r]
        s = lcm(*dens) if dens else 1
        rows.append([v.numerator * (s // v.denominator) for v in r])
    return rows


def rref(m):
    """Reduced row echelon form and ascending pivot columns."""
    m = q(np.asarray(m, dtype=object))
    nr, nc = m.shape
    rows, pivots = rref_int(_int_rows(m), nc)
    out = zeros(nr, nc)
    for i, c in enumerate(pivots):
        p = rows[i][c]
        out[i] = [Fraction(v, p) for v in rows[i]]
    return out, pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Canonical free-variable basis of the null space, as a list of vectors."""
    m = np.asarray(m, dtype=object)
    nc = m.shape[1]
    red, pivots = rref(m)
    pset = set(pivots)
    basis = []
    for f in range(nc):
        if f in pset:
            continue
        v = zeros(nc)
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i, f]
        basis.append(v)
    return basis


def solve(m, b):
    """Particular solution with free variables zero, or None if inconsistent."""
    m = np.asarray(m, dtype=object)
    nr, nc = m.shape
    b = q(np.asarray(b, dtype=object).reshape(-1))
    if len(b) != nr:
        raise ValueError("right-hand side length %d != rows %d" % (len(b), nr))
    aug = np.concatenate([q(m), b.reshape(nr, 1)], axis=1) if nr else zeros(0, nc + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == nc:
        return None
    x = zeros(nc)
    for i, c in enumerate(pivots):
        x[c] = red[i, nc]
    return x


def in_span(basis, v):
    """Coefficients expressing v in the given columns, or None."""
    v = q(np.asarray(v, dtype=object).reshape(-1))
    if not basis:
        return zeros(0) if is_zero(v) else None
    m = np.stack([q(np.asarray(b, dtype=object)) for b in basis], axis=1)
    return solve(m, v)


def inverse(m):
    m = q(np.asarray(m, dtype=object))
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of non-square matrix")
    red, pivots = rref(np.concatenate([m, eye(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:].copy()


def is_invertible(m):
    m = np.asarray(m, dtype=object)
    return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]


def _scaled(m):
    den = lcm(1, *(v.denominator for v in m.reshape(-1)))
    return np.array([v.numerator * (den // v.denominator) for v in m.reshape(-1)],
                    dtype=object).reshape(m.shape), den


def matmul(a, b):
    """Exact matrix product, computed on integers after clearing denominators."""
    a, b = q(np.asarray(a, dtype=object)), q(np.asarray(b, dtype=object))
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions differ: %s @ %s" % (a.shape, b.shape))
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    (ai, da), (bi, db) = _scaled(a), _scaled(b)
    big = max(abs(v) for v in ai.reshape(-1)) * max(abs(v) for v in bi.reshape(-1))
    if big * a.shape[1] < 2 ** 62:
        prod = ai.astype(np.int64).dot(bi.astype(np.int64)).astype(object)
    else:
        prod = ai.dot(bi)
    return q(prod) / (da * db)


def right_inverse(m):
    """Canonical right inverse of a full-row-rank matrix: columns solve m x = e_i."""
    m = np.asarray(m, dtype=object)
    nr, nc = m.shape
    out = zeros(nc, nr)
    for i in range(nr):
        e = zeros(nr)
        e[i] = Fraction(1)
        x = solve(m, e)
        if x is None:
            raise ValueError("matrix is not surjective")
        out[:, i] = x
    return out


def left_inverse(m):
    """Canonical left inverse of a full-column-rank matrix."""
    return right_inverse(np.asarray(m, dtype=object).T).T.copy()


class Reducer:
    """Normal forms modulo the span of a set of vectors.

    Two vectors reduce to the same normal form exactly when their
    difference lies in the span.
    """

    def __init__(self, vectors, length):
        self.length = length
        if vectors:
            red, piv = rref(np.stack(list(vectors), axis=0))
            self.rows = red[:len(piv)]
            self.pivots = piv
        else:
            self.rows = zeros(0, length)
            self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        v = q(np.asarray(v, dtype=object).reshape(-1)).copy()
        for row, c in zip(self.rows, self.pivots):
            if v[c] != 0:
                v = v - v[c] * row
        return v

    def contains(self, v):
        return is_zero(self.reduce(v))
