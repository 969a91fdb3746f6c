import importlib
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given
from hypothesis import strategies as st

from leibniz2 import _kernel_py, exactla
from leibniz2.exactla import (Reducer, eye, in_span, inverse, kernel_basis, mat, matmul, q, rank,
                              rref, solve, vec, zeros)

from conftest import arrays, matrices, rationals


def to_sympy(m):
    return sympy.Matrix(m.shape[0], m.shape[1],
                        [sympy.Rational(v.numerator, v.denominator) for v in m.reshape(-1)])


def from_sympy(s):
    return mat([[Fraction(int(v.p), int(v.q)) for v in s.row(i)] for i in range(s.rows)],
               s.cols)


def same(a, b):
    return a.shape == b.shape and bool(np.all(a == b))


# examples

def test_rref_identity():
    red, piv = rref(eye(2))
    assert same(red, eye(2)) and piv == [0, 1]


def test_rref_zero():
    red, piv = rref(zeros(2, 2))
    assert same(red, zeros(2, 2)) and piv == []


def test_rref_rank_one():
    red, piv = rref(mat([[2, 4], [1, 2]]))
    assert same(red, mat([[1, 2], [0, 0]])) and piv == [0]


def test_kernel_examples():
    assert kernel_basis(eye(3)) == []
    ks = kernel_basis(zeros(1, 2))
    assert [list(k) for k in ks] == [[1, 0], [0, 1]]
    assert [list(k) for k in kernel_basis(mat([[1, 2]]))] == [[-2, 1]]


def test_solve_examples():
    assert list(solve(eye(2), [5, 7])) == [5, 7]
    assert list(solve(mat([[1, 2]]), [3])) == [3, 0]
    assert solve(mat([[0]]), [1]) is None


def test_in_span_examples():
    assert list(in_span([vec([1, 0])], [2, 0])) == [2]
    assert len(in_span([], [0, 0])) == 0
    assert in_span([vec([1, 1])], [1, 0]) is None


def test_scalars_are_canonical():
    x = q("-6/4")
    assert x == Fraction(-3, 2) and x.denominator > 0


# properties against sympy

@given(matrices())
def test_rref_matches_sympy(m):
    red, piv = rref(m)
    if m.shape[0] == 0 or m.shape[1] == 0:
        assert piv == []
        return
    sred, spiv = to_sympy(m).rref()
    assert same(red, from_sympy(sred)) and piv == list(spiv)


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.shape[1]
    for k in kernel_basis(m):
        assert all(v == 0 for v in m.dot(k))


@given(matrices())
def test_rref_idempotent(m):
    red, piv = rref(m)
    red2, piv2 = rref(red)
    assert same(red, red2) and piv == piv2


@given(matrices(), st.data())
def test_solve_is_correct(m, data):
    b = data.draw(arrays((m.shape[0],)))
    x = solve(m, b)
    if x is None:
        assert rank(np.concatenate([m, b.reshape(-1, 1)], axis=1)) > rank(m)
    else:
        assert same(q(m.dot(x)) if m.size else zeros(m.shape[0]), b)


@given(st.integers(1, 4).flatmap(lambda n: arrays((n, n))))
def test_inverse(m):
    if rank(m) < m.shape[0]:
        return
    assert same(q(inverse(m).dot(m)), eye(m.shape[0]))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(arrays((n,)), max_size=3), arrays((n,)), arrays((n,)))))
def test_reducer_normal_forms(args):
    vs, u, w = args
    n = len(u)
    R = Reducer(vs, n)
    same_class = in_span(vs, u - w) is not None
    assert same_class == same(R.reduce(u), R.reduce(w))
    assert same(R.reduce(R.reduce(u)), R.reduce(u))


@given(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)).flatmap(
    lambda d: st.tuples(arrays((d[0], d[1]), rationals), arrays((d[1], d[2]), rationals))))
def test_matmul_matches_sympy(ab):
    a, b = ab
    got = matmul(a, b)
    assert got.shape == (a.shape[0], b.shape[1])
    if got.size:
        assert same(got, from_sympy(to_sympy(a) * to_sympy(b)))


def test_matmul_large_entries():
    a = mat([[2 ** 70, 1], [0, Fraction(1, 3)]])
    assert same(matmul(a, eye(2)), a)


# backends

@given(st.tuples(st.integers(0, 5), st.integers(0, 5)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-20, 20), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0]).map(lambda r: (r, rc[1]))))
def test_backends_agree(args):
    rows, nc = args
    try:
        from leibniz2 import _kernel
    except ImportError:
        return
    assert _kernel.rref_int(rows, nc) == _kernel_py.rref_int(rows, nc)


def test_pure_backend_selected_by_env(monkeypatch):
    monkeypatch.setenv("LEIBNIZ2_PURE", "1")
    mod = importlib.reload(exactla)
    try:
        assert mod.BACKEND == "python"
        assert mod.rref(mat([[2, 4], [1, 2]]))[1] == [0]
    finally:
        monkeypatch.delenv("LEIBNIZ2_PURE")
        importlib.reload(exactla)
