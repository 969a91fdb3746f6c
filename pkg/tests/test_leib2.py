import numpy as np
from hypothesis import assume, given
from hypothesis import strategies as st

from leibniz2.exactla import eye, inverse, is_invertible, kernel_basis, zeros
from leibniz2.fixtures import FIXTURES, fix_a, fix_b, fix_b_prime, fix_c, hemi3
from leibniz2.leib2 import (Derivation2, Hom2, check_derivation, algebra, compose_hom, derivation, hom, identity_hom,
                            inverse_hom, is_strict, transport, verify_algebra,
                            verify_derivation, verify_hom, zero_derivation)
from leibniz2.structure import ein

from conftest import arrays, small


def test_fixtures_verify():
    for name, f in FIXTURES.items():
        assert verify_algebra(f()) == [], name


def test_fix_b_prime_violation():
    v = verify_algebra(fix_b_prime())
    assert len(v) == 1
    assert v[0].axiom == "d" and v[0].index == (0, 0, 0) and v[0].residual == (-1, 0)


def test_l3_on_fix_a_is_allowed():
    # with d = 0 and all brackets zero every axiom holds for any l3
    g = algebra(1, 1, l3=[[[[1]]]])
    assert verify_algebra(g) == []
    assert not is_strict(g)


def test_is_strict():
    assert is_strict(fix_a()) and is_strict(fix_b())


def test_hom_examples():
    g = fix_b()
    assert verify_hom(identity_hom(g), g, g) == []
    swap = hom([[0, 1], [1, 0]], zeros(0, 0))
    v = verify_hom(swap, g, g)
    found = [(x.axiom, x.index, x.residual) for x in v]
    assert ("j", (0, 0), (1, 0)) in found
    assert ("j", (1, 1), (0, -1)) in found
    a = fix_a()
    assert verify_hom(hom([[2]], [[2]]), a, a) == []


def test_derivation_examples():
    g = fix_b()
    for name, f in FIXTURES.items():
        assert verify_derivation(zero_derivation(f()), f()) == []
    assert verify_derivation(derivation([[1, 0], [0, 2]], zeros(0, 0)), g) == []
    v = verify_derivation(derivation(eye(2), zeros(0, 0)), g)
    assert [(x.axiom, x.index) for x in v] == [("n", (0, 0))]


def homs(n0, n1):
    return st.tuples(arrays((n0, n0)), arrays((n1, n1)), arrays((n1, n0, n0))).map(
        lambda t: Hom2(*t))


@given(homs(2, 1), homs(2, 1), homs(2, 1))
def test_compose_associative(F, G, H):
    assert compose_hom(H, compose_hom(G, F)) == compose_hom(compose_hom(H, G), F)


@given(homs(2, 1))
def test_identity_laws(F):
    g = algebra(2, 1)
    assert compose_hom(identity_hom(g), F) == F
    assert compose_hom(F, identity_hom(g)) == F


@given(homs(2, 1))
def test_inverse(F):
    assume(is_invertible(F.F0) and is_invertible(F.F1))
    g = algebra(2, 1)
    assert compose_hom(inverse_hom(F), F) == identity_hom(g)
    assert compose_hom(F, inverse_hom(F)) == identity_hom(g)


def test_strict_homs_compose_strict():
    F = hom([[1, 1], [0, 1]], [[2]])
    G = hom([[3, 0], [1, 1]], [[1]])
    assert not compose_hom(G, F).F2.any()


SETTINGS = [fix_a(), fix_b(), fix_c(), hemi3(), algebra(1, 1, l3=[[[[1]]]])]


@given(st.sampled_from(SETTINGS).flatmap(
    lambda g: st.tuples(st.just(g), homs(g.dim0, g.dim1))))
def test_transport_is_homomorphism(args):
    g, T = args
    assume(is_invertible(T.F0) and is_invertible(T.F1))
    h = transport(g, T)
    assert verify_algebra(h) == []
    assert verify_hom(T, g, h) == []


def derivation_space(g):
    """Basis of all derivations, from the kernel of the stacked residuals."""
    n0, n1 = g.dim0, g.dim1
    sizes = [n0 * n0, n1 * n1, n1 * n0 * n0]
    cols = []
    for j in range(sum(sizes)):
        e = zeros(sum(sizes))
        e[j] = 1
        D = Derivation2(e[:sizes[0]].reshape(n0, n0), e[sizes[0]:sizes[0] + sizes[1]].reshape(n1, n1),
                        e[sizes[0] + sizes[1]:].reshape(n1, n0, n0))
        cols.append(np.concatenate([r.reshape(-1) for _, r in check_derivation(D, g)]))
    basis = kernel_basis(np.stack(cols, axis=1))
    return [Derivation2(b[:sizes[0]].reshape(n0, n0),
                        b[sizes[0]:sizes[0] + sizes[1]].reshape(n1, n1),
                        b[sizes[0] + sizes[1]:].reshape(n1, n0, n0)) for b in basis]


def combos(g):
    basis = derivation_space(g)
    return st.lists(small, min_size=len(basis), max_size=len(basis)).map(
        lambda cs: sum((b_scale(b, c) for b, c in zip(basis, cs)), zero_derivation(g)))


def b_scale(D, c):
    return Derivation2(c * D.D0, c * D.D1, c * D.D2)


def test_derivation_space_of_fix_b():
    # D0 e1 = a e1 + b e2, D0 e2 = 2a e2
    assert len(derivation_space(fix_b())) == 2


@given(st.sampled_from(SETTINGS).flatmap(
    lambda g: st.tuples(st.just(g), homs(g.dim0, g.dim1), combos(g))))
def test_conjugated_derivation(args):
    # the transported algebra carries T D T^-1 whenever g carries D
    g, T, D = args
    assume(is_invertible(T.F0) and is_invertible(T.F1))
    assert verify_derivation(D, g) == []
    T = Hom2(T.F0, T.F1, zeros(*T.F2.shape))
    h = transport(g, T)
    C = Derivation2(ein('ij,jk,kl->il', T.F0, D.D0, inverse(T.F0)),
                    ein('ij,jk,kl->il', T.F1, D.D1, inverse(T.F1)),
                    ein('oi,ijk,jx,ky->oxy', T.F1, D.D2, inverse(T.F0), inverse(T.F0)))
    assert verify_derivation(C, h) == []
