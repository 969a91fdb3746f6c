"""Small algebras used throughout the tests, the CLI corpus and the docs."""
from .leib2 import algebra
from .exactla import zeros


def fix_a():
    """dims (1,1), d = 0, every bracket and l3 zero."""
    return algebra(1, 1)


def fix_b():
    """Plain Leibniz algebra span{e1, e2} with [e1, e1] = e2."""
    b = zeros(2, 2, 2)
    b[1, 0, 0] = 1
    return algebra(2, 0, b00=b)


def fix_b_prime():
    """[e1, e1] = e1 instead; breaks the Leibniz identity."""
    b = zeros(2, 2, 2)
    b[0, 0, 0] = 1
    return algebra(2, 0, b00=b)


def fix_c():
    """dims (1,1), d(a) = x, brackets and l3 zero."""
    return algebra(1, 1, d=[[1]])


def hemi3():
    """span{h, m1, m2} with [h, m1] = m1, [h, m2] = -m2 and nothing else.

    A non-Lie Leibniz algebra: [m1, h] = 0 while [h, m1] = m1.
    """
    b = zeros(3, 3, 3)
    b[1, 0, 1] = 1
    b[2, 0, 2] = -1
    return algebra(3, 0, b00=b)


def skeletal():
    """dims (1,1), d = 0, l3(x, x, x) = a: a skeletal algebra with nonzero l3."""
    return algebra(1, 1, l3=[[[[1]]]])


FIXTURES = {
    "FIX_A": fix_a,
    "FIX_B": fix_b,
    "FIX_C": fix_c,
    "HEMI3": hemi3,
    "SKELETAL": skeletal,
}
