"""Seeded random element generators shared by the CLI verifiers and tests.

Everything is driven by an explicit ``random.Random`` so any reported
failure replays bit-exactly from its seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .poly import MultiPoly
from .rational import GaussianRational
from .star import CrossedElement


def random_gaussian_int(rng: random.Random, bound: int = 5) -> GaussianRational:
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_poly(rng: random.Random, degree: int, bound: int = 5,
                terms: int = 6, vars: Sequence[str] = ("x", "p")) -> MultiPoly:
    """Random polynomial of total degree <= degree in the given variables."""
    f = MultiPoly.zero()
    for _ in range(terms):
        left = degree
        exps = {}
        for v in vars:
            e = rng.randint(0, left)
            exps[v] = e
            left -= e
        f = f + MultiPoly.monomial(exps, random_gaussian_int(rng, bound))
    return f


def random_crossed(rng: random.Random, degree: int, bound: int = 5,
                   terms: int = 6) -> CrossedElement:
    return CrossedElement(random_poly(rng, degree, bound, terms),
                          random_poly(rng, degree, bound, terms))


def random_invariant_poly(rng: random.Random, degree: int, bound: int = 5,
                          terms: int = 6) -> MultiPoly:
    """Random polynomial fixed by (x, p) -> (-x, -p): even total degree terms."""
    f = MultiPoly.zero()
    for _ in range(terms):
        a = rng.randint(0, degree)
        b = rng.randint(0, degree - a)
        if (a + b) % 2:
            if b > 0:
                b -= 1
            elif a + b < degree:
                b += 1
            else:
                a -= 1
        f = f + MultiPoly.monomial({"x": a, "p": b}, random_gaussian_int(rng, bound))
    return f
