"""Independent constructions used as oracles by the Wells and acceptance tests."""
import numpy as np

from leibniz2.cochain import dim_cochains, unflatten
from leibniz2.exactla import kernel_basis, zeros
from leibniz2.ext import block_to_hat
from leibniz2.leib2 import Derivation2, Hom2, check_derivation, check_hom
from leibniz2.structure import ein
from leibniz2.wells import der_to_hat

from conftest import affine_solve


def flat(checks):
    return np.concatenate([r.reshape(-1) for _, r in checks])


def block(A, L, B):
    return np.concatenate([np.concatenate([A, zeros(A.shape[0], B.shape[1])], axis=1),
                           np.concatenate([L, B], axis=1)], axis=0)


def lifted(E, s, g, rho, pair, lam_vec, derivation=False):
    """The block map (alpha, lambda, beta) in the hat coordinates."""
    lam = unflatten(g, rho, 1, lam_vec)
    a = pair.alpha
    A0, A1, A2 = (a.D0, a.D1, a.D2) if derivation else (a.F0, a.F1, a.F2)
    M0 = block(A0, lam.phi0, pair.beta0)
    M1 = block(A1, lam.phi1, pair.beta1)
    M2 = zeros(M1.shape[0], M0.shape[0], M0.shape[0])
    M2[:g.dim1, :g.dim0, :g.dim0] = A2
    M2[g.dim1:, :g.dim0, :g.dim0] = lam.chi
    if derivation:
        return der_to_hat(E, s, Derivation2(M0, M1, M2))
    return block_to_hat(E, s, Hom2(M0, M1, M2))


def inducible_oracle(pair, E, s, g, rho, derivation=False):
    """Search the lifts directly; the residual is affine in lambda for an abelian fibre."""
    n = dim_cochains(g, rho, 1)
    if derivation:
        res = lambda v: flat(check_derivation(lifted(E, s, g, rho, pair, v, True), E.hat))
    else:
        res = lambda v: flat(check_hom(lifted(E, s, g, rho, pair, v), E.hat, E.hat))
    return affine_solve(res, n) is not None


def derivation_space(h):
    n0, n1 = h.dim0, h.dim1
    sizes = [n0 * n0, n1 * n1, n1 * n0 * n0]

    def unpack(v):
        return Derivation2(v[:sizes[0]].reshape(n0, n0),
                           v[sizes[0]:sizes[0] + sizes[1]].reshape(n1, n1),
                           v[sizes[0] + sizes[1]:].reshape(n1, n0, n0))
    return unpack, sum(sizes)


def fibre_derivations(E):
    """Basis of derivations of the total algebra that keep the fibre invariant and
    whose quadratic part vanishes when either argument lies in the fibre."""
    h = E.hat
    unpack, n = derivation_space(h)
    P0, P1 = E.p.m0, E.p.m1

    def res(v):
        D = unpack(v)
        keep = [ein('ij,jk,kl->il', P0, D.D0, E.i.m0).reshape(-1),
                ein('ij,jk,kl->il', P1, D.D1, E.i.m1).reshape(-1),
                ein('oXY,Xu->ouY', D.D2, E.i.m0).reshape(-1),
                ein('oXY,Yu->oXu', D.D2, E.i.m0).reshape(-1)]
        return np.concatenate([flat(check_derivation(D, h))] + keep)
    cols = []
    for j in range(n):
        e = zeros(n)
        e[j] = 1
        cols.append(res(e))
    return [unpack(v) for v in kernel_basis(np.stack(cols, axis=1))]


def complete_hom(F0, F1, h, n0):
    """A quadratic part supported on the first n0 coordinates making F a map of h."""
    n = h.dim1 * n0 * n0

    def quad(v):
        F2 = zeros(h.dim1, h.dim0, h.dim0)
        F2[:, :n0, :n0] = v.reshape(h.dim1, n0, n0)
        return F2
    x = affine_solve(lambda v: flat(check_hom(Hom2(F0, F1, quad(v)), h, h)), n)
    return None if x is None else Hom2(F0, F1, quad(x))
