import random

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from leibniz2.cochain import cohomology, unflatten, zero_cochain
from leibniz2.exactla import is_invertible, is_zero, q, zeros
from leibniz2.fixtures import fix_b, fix_c, hemi3
from leibniz2.leib2 import Hom2, algebra, transport, verify_algebra
from leibniz2.rep import adjoint_rep
from leibniz2.wells import InvalidPair, aut_induce, der_induce, wells_aut, wells_der
from leibniz2.xmod import (InvalidCrossedModule, NotStrict, as_aut_pair, as_der_pair,
                           crossed_module, strict_to_xmod, verify_xmod, xmod_aut_induce,
                           xmod_aut_pair, xmod_cocycle, xmod_der_induce, xmod_der_pair,
                           xmod_extension, xmod_rep, xmod_semidirect, xmod_to_strict,
                           xmod_wells, xmod_wells_der)

from conftest import arrays


def asym():
    b = fix_b().b00
    L = zeros(1, 2, 1)
    L[0, 0, 0] = 1
    return crossed_module(2, 1, bracket=b, left=L)


def identity_map():
    return crossed_module(1, 1, f=[[1]])


def test_verify_examples():
    assert verify_xmod(crossed_module(2, 1)) == []
    assert verify_xmod(identity_map()) == []
    assert verify_xmod(asym()) == []


def test_equivariance_violation():
    # f = id with a left action on p1 only breaks f(x.a) = [x, f a]
    x = crossed_module(1, 1, f=[[1]], left=[[[1]]])
    labels = {v.axiom for v in verify_xmod(x)}
    assert "crossed01 left" in labels


def test_strict_correspondence():
    x = strict_to_xmod(fix_c())
    assert list(x.f.reshape(-1)) == [1] and not x.left.any() and not x.right.any()
    g = xmod_to_strict(crossed_module(1, 1))
    assert g == algebra(1, 1)
    with pytest.raises(NotStrict):
        strict_to_xmod(algebra(1, 1, l3=[[[[1]]]]))


BASES = [crossed_module(2, 1), identity_map(), asym(), strict_to_xmod(fix_c()),
         strict_to_xmod(hemi3())]


@st.composite
def xmods(draw):
    x = draw(st.sampled_from(BASES))
    T0 = draw(arrays((x.dim0, x.dim0)))
    T1 = draw(arrays((x.dim1, x.dim1)))
    assume(is_invertible(T0) and is_invertible(T1))
    g = transport(xmod_to_strict(x), Hom2(T0, T1, zeros(x.dim1, x.dim0, x.dim0)))
    return strict_to_xmod(g)


@given(xmods())
def test_round_trip(x):
    assert verify_xmod(x) == []
    assert verify_algebra(xmod_to_strict(x)) == []
    assert strict_to_xmod(xmod_to_strict(x)) == x


def test_semidirect_examples():
    x = identity_map()
    rho = xmod_rep(x, [[0]])
    y = xmod_semidirect(x, rho)
    assert (y.dim0, y.dim1) == (2, 2) and verify_xmod(y) == []
    rho = xmod_rep(asym(), zeros(2, 1))
    assert verify_xmod(xmod_semidirect(asym(), rho)) == []


def test_semidirect_rejects_non_representations():
    x = identity_map()
    with pytest.raises(InvalidCrossedModule):
        xmod_semidirect(x, xmod_rep(x, [[0]], l0_0=[[[1]]]))


@given(xmods())
def test_adjoint_semidirect(x):
    rho = adjoint_rep(xmod_to_strict(x))
    y = xmod_semidirect(x, rho)
    assert verify_xmod(y) == []
    assert (y.dim0, y.dim1) == (2 * x.dim0, 2 * x.dim1)


# inducibility through the direct system and through the strict algebra

def psi_case():
    x = crossed_module(1, 1)
    rho = xmod_rep(x, [[0]])
    c = xmod_cocycle(x, rho, theta=[[1]])
    E, s = xmod_extension(x, rho, c)
    return x, rho, c, E, s


def same_report(r1, r2):
    assert r1.compatible == r2.compatible
    if not r1.compatible:
        return
    assert list(r1.obstruction_class) == list(r2.obstruction_class)
    assert r1.inducible == r2.inducible
    if r1.inducible:
        assert r1.witness == r2.witness
        assert r1.induced == r2.induced


def test_identity_and_zero_pairs():
    x, rho, c, E, s = psi_case()
    r = xmod_aut_induce(xmod_aut_pair(x, rho.partial, [[1]], [[1]], [[1]], [[1]]), E, s)
    assert r.inducible and r.witness.is_zero()
    r = xmod_der_induce(xmod_der_pair(x, rho.partial, [[0]], [[0]], [[0]], [[0]]), E, s)
    assert r.inducible and r.witness.is_zero()


def test_scaling_obstruction():
    x, rho, c, E, s = psi_case()
    P = xmod_aut_pair(x, rho.partial, [[2]], [[2]], [[1]], [[1]])
    r = xmod_aut_induce(P, E, s)
    assert not r.inducible and not is_zero(r.obstruction_class)
    assert list(xmod_wells(P, E, s)) == list(r.obstruction_class)
    same_report(r, aut_induce(as_aut_pair(P), E, s, strict=True))
    P = xmod_aut_pair(x, rho.partial, [[2]], [[2]], [[1]], [[2]])
    assert xmod_aut_induce(P, E, s).inducible
    D = xmod_der_pair(x, rho.partial, [[1]], [[1]], [[0]], [[0]])
    r = xmod_der_induce(D, E, s)
    assert not r.inducible and not is_zero(r.obstruction_class)
    same_report(r, der_induce(as_der_pair(D), E, s, strict=True))


def strict_cocycles(x, rho):
    S = cohomology(xmod_to_strict(x), rho, strict=True)
    return [unflatten(xmod_to_strict(x), rho, 2, z) for z in S.z2_basis]


def test_agreement_on_fixtures():
    rnd = random.Random(17)
    checked = 0
    for x in BASES:
        g = xmod_to_strict(x)
        for rho in (adjoint_rep(g), xmod_rep(x, zeros(1, 1))):
            cs = [zero_cochain(g, rho, 2)] + strict_cocycles(x, rho)[:2]
            for c in cs:
                E, s = xmod_extension(x, rho, c)
                for _ in range(4):
                    m = lambda n: q(np.array([rnd.randint(-2, 2) for _ in range(n * n)],
                                             dtype=object).reshape(n, n))
                    b0, b1 = m(rho.dimV0), m(rho.dimV1)
                    a0, a1 = m(x.dim0), m(x.dim1)
                    try:
                        P = xmod_aut_pair(x, rho.partial, b0, b1, a0, a1)
                    except InvalidPair:
                        pass
                    else:
                        r = xmod_aut_induce(P, E, s)
                        same_report(r, aut_induce(as_aut_pair(P), E, s, strict=True))
                        if r.compatible:
                            assert list(xmod_wells(P, E, s)) == list(
                                wells_aut(as_aut_pair(P), E, s, strict=True))
                        checked += 1
                    try:
                        D = xmod_der_pair(x, rho.partial, b0, b1, a0, a1)
                    except InvalidPair:
                        continue
                    r = xmod_der_induce(D, E, s)
                    same_report(r, der_induce(as_der_pair(D), E, s, strict=True))
                    if r.compatible:
                        assert list(xmod_wells_der(D, E, s)) == list(
                            wells_der(as_der_pair(D), E, s, strict=True))
                    checked += 1
    assert checked > 20
