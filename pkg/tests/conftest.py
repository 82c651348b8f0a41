import random

import pytest

from dunklstar.poly import MultiPoly
from dunklstar.randgen import random_gaussian_int, random_poly


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_single_var(rng, var="x", degree=8, bound=5):
    """Random one-variable polynomial of degree <= degree."""
    f = MultiPoly.zero()
    for d in range(degree + 1):
        if rng.random() < 0.6:
            f = f + MultiPoly.monomial({var: d}, random_gaussian_int(rng, bound))
    return f


def random_xy_poly(rng, degree=4, bound=5, terms=6):
    return random_poly(rng, degree, bound, terms)
