"""PBW normal forms in the rank-1 algebra generated by X, P, G.

The defining relations are

    P X = X P - i - 2 i k G,     G X = -X G,     G P = -P G,     G^2 = 1,

with k a central polynomial parameter.  X acts on one-variable
polynomials by multiplication, G by the reflection x -> -x, and P by -i
times the Dunkl operator, so that the symbol x^a p^b corresponds to
X^a P^b.  Elements are stored in the ordered basis X^a P^b G^e with
coefficients polynomial in k; two elements are equal iff their basis
coefficients agree.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Optional, Tuple

from .calculus import dunkl
from .poly import MultiPoly
from .rational import GaussianRational, MINUS_I

Key = Tuple[int, int, int]  # (x power, P power, reflection flag)
Word = Tuple[str, ...]

_MINUS_I_CONST = MultiPoly.const(MINUS_I)
_MINUS_2IK = MultiPoly.var("k").scale(GaussianRational(0, -2))


def _acc(terms: Dict[Key, MultiPoly], key: Key, val: MultiPoly) -> None:
    if val.is_zero():
        return
    prev = terms.get(key)
    if prev is None:
        terms[key] = val
    else:
        s = prev + val
        if s.is_zero():
            del terms[key]
        else:
            terms[key] = s


class NormalForm:
    """Exact element in the ordered basis X^a P^b G^e."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Key, MultiPoly]):
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("NormalForm is immutable")

    @staticmethod
    def zero() -> "NormalForm":
        return NormalForm({})

    @staticmethod
    def basis(a: int, b: int, e: int, coeff: Optional[MultiPoly] = None) -> "NormalForm":
        c = MultiPoly.const(1) if coeff is None else coeff
        if c.is_zero():
            return NormalForm({})
        return NormalForm({(a, b, e): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, hash(v)) for k, v in self.terms.items()))

    def __add__(self, other: "NormalForm") -> "NormalForm":
        terms = dict(self.terms)
        for key, val in other.terms.items():
            _acc(terms, key, val)
        return NormalForm(terms)

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        terms = dict(self.terms)
        for key, val in other.terms.items():
            _acc(terms, key, -val)
        return NormalForm(terms)

    def scale(self, c) -> "NormalForm":
        if isinstance(c, MultiPoly):
            if c.is_zero():
                return NormalForm({})
            return NormalForm({k: v * c for k, v in self.terms.items()})
        return NormalForm({k: v.scale(c) for k, v in self.terms.items()})

    def __repr__(self):
        bits = [f"({a},{b},{e}):{v!r}" for (a, b, e), v in sorted(self.terms.items())]
        return "NormalForm{" + ", ".join(bits) + "}"


# -- word rewriting -----------------------------------------------------------

_BAD_PAIRS = {("P", "X"), ("G", "X"), ("G", "P"), ("G", "G")}


def _bad_positions(word: Word) -> List[int]:
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in _BAD_PAIRS]


def _rewrite_at(word: Word, i: int) -> List[Tuple[Word, MultiPoly]]:
    pair = (word[i], word[i + 1])
    head, tail = word[:i], word[i + 2:]
    if pair == ("P", "X"):
        return [
            (head + ("X", "P") + tail, MultiPoly.const(1)),
            (head + tail, _MINUS_I_CONST),
            (head + ("G",) + tail, _MINUS_2IK),
        ]
    if pair == ("G", "X"):
        return [(head + ("X", "G") + tail, MultiPoly.const(-1))]
    if pair == ("G", "P"):
        return [(head + ("P", "G") + tail, MultiPoly.const(-1))]
    return [(head + tail, MultiPoly.const(1))]  # G G


def _word_key(word: Word) -> Key:
    a = b = e = 0
    for ch in word:
        if ch == "X":
            a += 1
        elif ch == "P":
            b += 1
        else:
            e ^= 1
    return (a, b, e)


def reduce_word(word: Word, strategy: str = "leftmost",
                rng: Optional[random.Random] = None) -> NormalForm:
    """Rewrite an arbitrary generator word to its normal form.

    Each rule strictly decreases (#misordered pairs weighted by length),
    so any strategy terminates; confluence across strategies is a tested
    property, and the memoised leftmost route is the production path.
    """
    if strategy == "leftmost" and rng is None:
        return _reduce_leftmost(word)
    terms: Dict[Key, MultiPoly] = {}
    work: List[Tuple[Word, MultiPoly]] = [(word, MultiPoly.const(1))]
    while work:
        w, c = work.pop()
        bad = _bad_positions(w)
        if not bad:
            _acc(terms, _word_key(w), c)
            continue
        if strategy == "leftmost":
            i = bad[0]
        elif strategy == "rightmost":
            i = bad[-1]
        elif strategy == "random":
            i = rng.choice(bad) if rng is not None else bad[0]
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        for nw, factor in _rewrite_at(w, i):
            work.append((nw, c * factor))
    return NormalForm(terms)


_reduce_cache: Dict[Word, NormalForm] = {}


def _reduce_leftmost(word: Word) -> NormalForm:
    got = _reduce_cache.get(word)
    if got is not None:
        return got
    bad = _bad_positions(word)
    if not bad:
        result = NormalForm.basis(*_word_key(word))
    else:
        terms: Dict[Key, MultiPoly] = {}
        for nw, factor in _rewrite_at(word, bad[0]):
            for key, val in _reduce_leftmost(nw).terms.items():
                _acc(terms, key, val * factor)
        result = NormalForm(terms)
    _reduce_cache[word] = result
    return result


# -- product ------------------------------------------------------------------


def multiply(L: NormalForm, R: NormalForm) -> NormalForm:
    """PBW normal form of the product."""
    terms: Dict[Key, MultiPoly] = {}
    for (a1, b1, e1), c1 in L.terms.items():
        for (a2, b2, e2), c2 in R.terms.items():
            coeff = c1 * c2
            if e1 and (a2 + b2) % 2:
                coeff = -coeff
            middle = _reduce_leftmost(("P",) * b1 + ("X",) * a2)
            for (am, bm, em), cm in middle.terms.items():
                c = coeff * cm
                if em and b2 % 2:
                    c = -c
                _acc(terms, (a1 + am, bm + b2, em ^ e1 ^ e2), c)
    return NormalForm(terms)


# -- symbols ------------------------------------------------------------------


def from_symbol(plain, gamma: Optional[MultiPoly] = None) -> NormalForm:
    """Monomials x^a p^b k^c map to k^c X^a P^b; the reflection component
    (a crossed element's second part, or the optional second argument)
    carries the flag."""
    from .poly import var_index

    if not isinstance(plain, MultiPoly):  # a crossed element
        if gamma is not None:
            raise ValueError("pass either a crossed element or two polynomials")
        plain, gamma = plain.plain, plain.gamma
    xi, pi, ki = var_index("x"), var_index("p"), var_index("k")
    terms: Dict[Key, MultiPoly] = {}
    for e, f in ((0, plain), (1, gamma)):
        if f is None:
            continue
        for mono, c in f.terms.items():
            a = b = kc = 0
            for i, ex in mono:
                if i == xi:
                    a = ex
                elif i == pi:
                    b = ex
                elif i == ki:
                    kc = ex
                else:
                    raise ValueError("symbols must be polynomials in x, p, k")
            _acc(terms, (a, b, e), MultiPoly.monomial({"k": kc}, c))
    return NormalForm(terms)


def to_symbol_layers(N: NormalForm):
    """Split by powers of k: layer l holds the plain/gamma symbol pair."""
    from .star import CrossedElement

    layers: Dict[int, List[MultiPoly]] = {}
    for (a, b, e), kpoly in N.terms.items():
        xp = MultiPoly.monomial({"x": a, "p": b})
        for mono, c in kpoly.terms.items():
            kc = mono[0][1] if mono else 0
            pair = layers.setdefault(kc, [MultiPoly.zero(), MultiPoly.zero()])
            pair[e] = pair[e] + xp.scale(c)
    return {l: CrossedElement(pl, gm) for l, (pl, gm) in layers.items()
            if not (pl.is_zero() and gm.is_zero())}


def apply(N: NormalForm, g: MultiPoly) -> MultiPoly:
    """Operator action on a one-variable polynomial in x."""
    total = MultiPoly.zero()
    for (a, b, e), c in N.terms.items():
        h = g.reflect({"x": -1}) if e else g
        for _ in range(b):
            h = dunkl(h, "x").scale(MINUS_I)
        if h.is_zero():
            continue
        total = total + h * MultiPoly.monomial({"x": a}) * c
    return total


def action_vanishes(N: NormalForm, degree: int, k_values: Iterable) -> bool:
    """True iff N kills 1, x, ..., x^degree at every given k value."""
    monos = [MultiPoly.monomial({"x": d}) for d in range(degree + 1)]
    for g in monos:
        out = apply(N, g)
        for kv in k_values:
            if not out.eval_at({"k": kv}).is_zero():
                return False
    return True
