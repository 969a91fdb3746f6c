from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from leibniz2.exactla import q
from leibniz2.fixtures import FIXTURES
from leibniz2.rep import adjoint_rep, trivial_rep

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.integers(-3, 3).map(Fraction)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def arrays(shape, elements=small):
    n = int(np.prod(shape)) if shape else 1
    return st.lists(elements, min_size=n, max_size=n).map(
        lambda xs: q(np.array(xs, dtype=object).reshape(shape)))


def matrices(max_rows=4, max_cols=4, elements=small):
    return st.tuples(st.integers(0, max_rows), st.integers(0, max_cols)).flatmap(
        lambda rc: arrays(rc, elements))


def settings_list():
    """Every fixture with its adjoint representation and a trivial one on (1,1)."""
    out = []
    for name, f in FIXTURES.items():
        g = f()
        out.append(("%s-adjoint" % name, g, adjoint_rep(g)))
        out.append(("%s-trivial" % name, g, trivial_rep(g, 1, 1)))
    return out


SETTINGS = settings_list()


@pytest.fixture(params=SETTINGS, ids=[s[0] for s in SETTINGS])
def setting(request):
    return request.param[1], request.param[2]


def affine_solve(residual, n):
    """x with residual(x) = 0 for an affine residual on Q^n, or None."""
    from leibniz2.exactla import solve, zeros
    base = residual(zeros(n))
    cols = []
    for j in range(n):
        e = zeros(n)
        e[j] = 1
        cols.append(residual(e) - base)
    A = np.stack(cols, axis=1) if cols else zeros(len(base), 0)
    return solve(A, -base)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
