import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibniz2.cochain import (NotCocycle, cochain, cohomology, d1, unflatten, zero_cochain)
from leibniz2.exactla import mat, zeros
from leibniz2.ext import (Extension, Splitting, build_extension, check_extension,
                          extensions_equivalent, extract_cocycle, find_splitting, induced_rep,
                          is_equivalence, semidirect)
from leibniz2.fixtures import fix_a, fix_b, fix_c
from leibniz2.leib2 import algebra, verify_algebra, verify_hom
from leibniz2.rep import adjoint_rep, trivial_rep
from leibniz2.structure import GradedMap, TwoTermComplex, ein

from conftest import SETTINGS, arrays


def cocycle_basis(g, rho):
    return [unflatten(g, rho, 2, z) for z in cohomology(g, rho).z2_basis]


def test_semidirect_is_split():
    for _, g, rho in SETTINGS:
        E, s = semidirect(g, rho)
        assert check_extension(E) == []
        assert verify_algebra(E.hat) == []
        assert extract_cocycle(E, s).is_zero()
        assert induced_rep(E, s) == rho
        assert find_splitting(E) == s


def test_build_examples():
    g = fix_a()
    rho = trivial_rep(g, 1, 1)
    E, s = build_extension(g, rho, cochain(g, rho, 2, omega=[[[1]]]))
    assert (E.hat.dim0, E.hat.dim1) == (2, 2)
    assert sum(1 for v in E.hat.b00.reshape(-1) if v) == 1
    assert verify_algebra(E.hat) == []
    E, s = build_extension(g, rho, cochain(g, rho, 2, theta=[[[[1]]]]))
    assert E.hat.l3.any() and verify_algebra(E.hat) == []


def test_build_rejects_non_cocycle():
    g = fix_b()
    rho = adjoint_rep(g)
    with pytest.raises(NotCocycle):
        build_extension(g, rho, cochain(g, rho, 2, omega=[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]))


def test_roundtrip_every_basis_cocycle():
    for _, g, rho in SETTINGS:
        for c in cocycle_basis(g, rho):
            E, s = build_extension(g, rho, c)
            assert check_extension(E) == []
            assert extract_cocycle(E, s) == c
            assert induced_rep(E, s) == rho


def test_trivial_rep_induced_for_any_cocycle():
    g = fix_a()
    rho = trivial_rep(g, 1, 1)
    for c in cocycle_basis(g, rho):
        E, s = build_extension(g, rho, c)
        assert induced_rep(E, s) == rho


def test_find_splitting_example():
    # hat0 = Q^2 over g0 = Q with p = [1 1]; fibre spanned by (1, -1)
    g = algebra(1, 0)
    hat = algebra(2, 0)
    E = Extension(hat, g, TwoTermComplex(0, 1, zeros(1, 0)),
                  GradedMap(mat([[1], [-1]]), zeros(0, 0)), GradedMap(mat([[1, 1]]), zeros(0, 0)))
    assert check_extension(E) == []
    s = find_splitting(E)
    assert list(s.s0[:, 0]) == [1, 0]


def test_psi_recovers_the_differential():
    # FIX_C as an extension of (Q -> 0) by (0 -> Q): the differential becomes psi
    hat = fix_c()
    g = algebra(0, 1)
    E = Extension(hat, g, TwoTermComplex(0, 1, zeros(1, 0)),
                  GradedMap(mat([[1]]), zeros(1, 0)), GradedMap(zeros(0, 1), mat([[1]])))
    assert check_extension(E) == []
    s = find_splitting(E)
    c = extract_cocycle(E, s)
    assert c.psi.shape == (1, 1) and c.psi[0, 0] == 1


@st.composite
def extension_and_splittings(draw):
    _, g, rho = draw(st.sampled_from(SETTINGS))
    basis = cocycle_basis(g, rho)
    cs = draw(st.lists(st.integers(-2, 2), min_size=len(basis), max_size=len(basis)))
    c = zero_cochain(g, rho, 2)
    for k, b in zip(cs, basis):
        c = c + b.scale(k)
    E, s = build_extension(g, rho, c)
    # another splitting: s + i h for arbitrary h
    h0 = draw(arrays((rho.dimV0, g.dim0)))
    h1 = draw(arrays((rho.dimV1, g.dim1)))
    t = Splitting(s.s0 + ein('ij,jk->ik', E.i.m0, h0), s.s1 + ein('ij,jk->ik', E.i.m1, h1))
    return g, rho, c, E, s, t, h0, h1


@given(extension_and_splittings())
def test_splitting_independence(args):
    g, rho, c, E, s, t, h0, h1 = args
    assert induced_rep(E, t) == induced_rep(E, s)
    c2 = extract_cocycle(E, t)
    # moving the splitting changes the cocycle by a coboundary
    lam = cochain(g, rho, 1, phi0=h0, phi1=h1)
    assert c2 == c + d1(g, rho, lam)


def test_equivalence_examples():
    g = fix_a()
    rho = trivial_rep(g, 1, 1)
    E, s = build_extension(g, rho, cochain(g, rho, 2, psi=[[1]]))
    F = extensions_equivalent(E, E)
    assert F is not None and is_equivalence(F, E, E)
    E0, _ = semidirect(g, rho)
    assert extensions_equivalent(E, E0) is None


@given(arrays((3,)))
def test_coboundary_shift_is_equivalent(xs):
    g = fix_c()
    rho = trivial_rep(g, 1, 1)
    c = cochain(g, rho, 2, mu=[[[1]]], nu=[[[1]]])
    lam = unflatten(g, rho, 1, xs)
    E1, _ = build_extension(g, rho, c)
    E2, _ = build_extension(g, rho, c + d1(g, rho, lam))
    F = extensions_equivalent(E1, E2)
    assert F is not None
    assert verify_hom(F, E1.hat, E2.hat) == []
    # unipotent: identity on the base block and on the fibre block
    assert F.F0[0, 0] == 1 and F.F0[1, 1] == 1 and F.F0[0, 1] == 0
    assert F.F1[0, 0] == 1 and F.F1[1, 1] == 1 and F.F1[0, 1] == 0


def test_classes_distinguish_extensions():
    for _, g, rho in SETTINGS:
        S = cohomology(g, rho)
        E0, _ = semidirect(g, rho)
        for h in S.h2_representatives:
            E, _ = build_extension(g, rho, unflatten(g, rho, 2, h))
            assert extensions_equivalent(E, E0) is None
