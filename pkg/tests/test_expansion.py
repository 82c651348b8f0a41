import pytest

from dunklstar.calculus import Composition, c_nu
from dunklstar.expansion import (expansion_product, k_layers,
                                 specialize_parameters, verify_pair,
                                 word_census)
from dunklstar.poly import MultiPoly
from dunklstar.randgen import random_poly
from dunklstar.rational import GaussianRational
from dunklstar.star import CrossedElement

x = MultiPoly.var("x")
p = MultiPoly.var("p")
one = MultiPoly.const(1)


def test_expansion_linear_example():
    layers = expansion_product(p, x)
    assert set(layers) == {0, 1}
    assert layers[0].plain == x * p - one.scale(GaussianRational(0, 1))
    assert layers[0].gamma.is_zero()
    assert layers[1].plain.is_zero()
    assert layers[1].gamma == one.scale(GaussianRational(0, -2))


def test_expansion_degenerate_left_factor(rng):
    a = x ** 2 + x.scale(3)  # no p dependence: only the empty word survives
    b = random_poly(rng, 4)
    layers = expansion_product(a, b)
    assert set(layers) <= {0}
    got = layers.get(0, CrossedElement.zero())
    assert got.plain == a * b and got.gamma.is_zero()


def test_expansion_quadratic_example():
    layers = expansion_product(p ** 2, x ** 2)
    assert layers[0].plain == (x ** 2 * p ** 2
                               - (x * p).scale(GaussianRational(0, 4))
                               - one.scale(2))
    assert layers[1].gamma == one.scale(-4)
    assert layers[1].plain.is_zero()


def test_expansion_rejects_parameter_variables():
    with pytest.raises(ValueError):
        expansion_product(MultiPoly.var("h1"), x)


def test_k_layers_and_specialization():
    A = CrossedElement(MultiPoly.var("h1") * x + MultiPoly.var("h1") ** 2,
                       MultiPoly.var("h1") * MultiPoly.var("h2") * p)
    spec = specialize_parameters(A)
    layers = k_layers(spec)
    assert layers[0].plain == x + one
    assert layers[1].gamma == p


def test_word_census_reproduces_multiplicities():
    for alpha in range(7):
        census = word_census(alpha)
        for (pattern, s), count in census.items():
            if any(v < 1 for v in pattern[1:-1]):
                continue  # adjacent difference letters act as zero
            nu = Composition(pattern)
            assert nu.m + nu.n + s == alpha
            assert count == c_nu(nu, s), (pattern, s)


def test_word_census_accounts_for_every_word():
    # dropping the signs and reflections, the shapes must tile all 3^alpha words
    for alpha in range(6):
        raw = 0
        for (pattern, s), _count in word_census(alpha).items():
            import math
            ways = 1
            slots = list(pattern)
            total_p = s
            # p1 letters distribute into len(pattern) blocks with binomials
            def distributions(blocks, left):
                if len(blocks) == 1:
                    return math.comb(blocks[0] + left, left)
                return sum(math.comb(blocks[0] + t, t) * distributions(blocks[1:], left - t)
                           for t in range(left + 1))
            raw += distributions(slots, total_p)
        assert raw == 3 ** alpha


def test_verify_pair_worked_examples():
    assert verify_pair(p, x).ok
    assert verify_pair(one, x * p + p ** 2).ok
    assert verify_pair(p ** 2, x ** 2).ok
    report = verify_pair(p ** 4, x ** 5)  # orientation-sensitive case
    assert report.ok, report.describe()


def test_verify_pair_random(rng):
    for _ in range(10):
        report = verify_pair(random_poly(rng, 4), random_poly(rng, 4))
        assert report.ok, report.describe()


def test_report_details_mention_layer():
    from dunklstar.expansion import _compare_layers

    base = {0: CrossedElement(x, MultiPoly.zero())}
    other = {0: CrossedElement(p, MultiPoly.zero()),
             1: CrossedElement(MultiPoly.zero(), one)}
    mismatches = _compare_layers(base, other, "probe")
    kinds = {(m.layer, m.component) for m in mismatches}
    assert kinds == {(0, "plain"), (1, "gamma")}
    assert "layer k^0 plain" in mismatches[0].describe()
