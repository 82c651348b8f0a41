"""Constructive jet matching at the four reflection-related base points.

Given prescribed mixed partials up to order (m, n) at (x0, p0) and its
reflections, build a polynomial whose jets agree exactly at every
distinct point.  The construction is staged: a Taylor block at the base
point, then one correction block per remaining mirror point, each block
a factor vanishing to high order at the already-fixed points times an
unknown polynomial solved by a triangular elimination whose diagonal
entries are (-2 x0)^(m+1) / (-2 p0)^(n+1) powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from .poly import MultiPoly
from .rational import GaussianRational

Point = Tuple[Fraction, Fraction]

# point order: (x0,p0), (-x0,p0), (x0,-p0), (-x0,-p0)
_SIGNS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


class JetDataError(ValueError):
    """Inconsistent or incomplete jet prescription."""


def _as_fraction(v: Union[int, Fraction]) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("base coordinates must be exact rationals")


@dataclass(frozen=True)
class JetData:
    """Prescribed values of d_x^i d_p^j f at the four reflected base points.

    ``values`` maps (point index 0..3, i, j) to the prescribed number;
    indices that coincide because a coordinate vanishes must carry equal
    values, and every distinct point needs the full (m+1)(n+1) grid.
    """

    x0: Fraction
    p0: Fraction
    m: int
    n: int
    values: Mapping[Tuple[int, int, int], GaussianRational]

    def __post_init__(self):
        object.__setattr__(self, "x0", _as_fraction(self.x0))
        object.__setattr__(self, "p0", _as_fraction(self.p0))
        if self.m < 0 or self.n < 0:
            raise JetDataError("jet orders must be nonnegative")

    def points(self) -> List[Point]:
        return [(sx * self.x0, sp * self.p0) for sx, sp in _SIGNS]

    def resolved(self) -> Dict[Point, Dict[Tuple[int, int], GaussianRational]]:
        """Values grouped per distinct point, with consistency enforced."""
        pts = self.points()
        out: Dict[Point, Dict[Tuple[int, int], GaussianRational]] = {}
        for (idx, i, j), val in self.values.items():
            if not (0 <= idx <= 3):
                raise JetDataError(f"point index {idx} out of range")
            if not (0 <= i <= self.m and 0 <= j <= self.n):
                raise JetDataError(f"jet order ({i},{j}) outside ({self.m},{self.n})")
            grid = out.setdefault(pts[idx], {})
            prev = grid.get((i, j))
            if prev is not None and prev != val:
                raise JetDataError(
                    f"conflicting values at identified point {pts[idx]} order ({i},{j})")
            grid[(i, j)] = val
        for pt in dict.fromkeys(pts):
            grid = out.get(pt)
            if grid is None:
                raise JetDataError(f"no values prescribed at {pt}")
            for i in range(self.m + 1):
                for j in range(self.n + 1):
                    if (i, j) not in grid:
                        raise JetDataError(f"missing value at {pt} order ({i},{j})")
        return out


def jet_eval(g: MultiPoly, pt: Point, i: int, j: int) -> GaussianRational:
    """Exact value of d_x^i d_p^j g at the point."""
    h = g
    for _ in range(i):
        h = h.differentiate("x")
    for _ in range(j):
        h = h.differentiate("p")
    return h.eval_at({"x": pt[0], "p": pt[1]}).constant_value()


def _taylor_block(grid, m, n, xc: MultiPoly, pc: MultiPoly) -> MultiPoly:
    g = MultiPoly.zero()
    for i in range(m + 1):
        for j in range(n + 1):
            c = grid[(i, j)] * GaussianRational(Fraction(1, math.factorial(i) * math.factorial(j)))
            if c:
                g = g + (xc ** i * pc ** j).scale(c)
    return g


def _solve_stage(g: MultiPoly, factor: MultiPoly, xb: MultiPoly, pb: MultiPoly,
                 pt: Point, grid, m: int, n: int) -> MultiPoly:
    """Add factor * (unknown in the basis xb^s pb^t / s!t!) so the jets at
    ``pt`` match; triangular because earlier basis terms cannot feed back."""
    for s in range(m + 1):
        for t in range(n + 1):
            probe = factor * (xb ** s * pb ** t).scale(
                GaussianRational(Fraction(1, math.factorial(s) * math.factorial(t))))
            diag = jet_eval(probe, pt, s, t)
            if not diag:
                raise JetDataError("degenerate diagonal in jet solve")
            resid = grid[(s, t)] - jet_eval(g, pt, s, t)
            if resid:
                g = g + probe.scale(resid / diag)
    return g


def jet_match(J: JetData) -> MultiPoly:
    """Polynomial of bidegree at most (2m+1, 2n+1) matching all prescribed jets."""
    grids = J.resolved()
    x0, p0, m, n = J.x0, J.p0, J.m, J.n
    x = MultiPoly.var("x")
    p = MultiPoly.var("p")
    cx0 = MultiPoly.const(GaussianRational(x0))
    cp0 = MultiPoly.const(GaussianRational(p0))

    if x0 == 0 and p0 == 0:
        return _taylor_block(grids[(x0, p0)], m, n, x, p)

    if x0 != 0 and p0 == 0:
        g = _taylor_block(grids[(x0, p0)], m, n, x - cx0, p)
        return _solve_stage(g, (x - cx0) ** (m + 1), x + cx0, p,
                            (-x0, p0), grids[(-x0, p0)], m, n)

    if x0 == 0 and p0 != 0:
        g = _taylor_block(grids[(x0, p0)], m, n, x, p - cp0)
        return _solve_stage(g, (p - cp0) ** (n + 1), x, p + cp0,
                            (x0, -p0), grids[(x0, -p0)], m, n)

    g = _taylor_block(grids[(x0, p0)], m, n, x - cx0, p - cp0)
    g = _solve_stage(g, (x - cx0) ** (m + 1), x + cx0, p - cp0,
                     (-x0, p0), grids[(-x0, p0)], m, n)
    g = _solve_stage(g, (p - cp0) ** (n + 1), x - cx0, p + cp0,
                     (x0, -p0), grids[(x0, -p0)], m, n)
    g = _solve_stage(g, (x - cx0) ** (m + 1) * (p - cp0) ** (n + 1),
                     x + cx0, p + cp0, (-x0, -p0), grids[(-x0, -p0)], m, n)
    return g


def jets_of(f: MultiPoly, x0: Union[int, Fraction], p0: Union[int, Fraction],
            m: int, n: int) -> JetData:
    """Sample a polynomial's jets into a JetData prescription."""
    x0, p0 = _as_fraction(x0), _as_fraction(p0)
    values: Dict[Tuple[int, int, int], GaussianRational] = {}
    for idx, (sx, sp) in enumerate(_SIGNS):
        pt = (sx * x0, sp * p0)
        for i in range(m + 1):
            for j in range(n + 1):
                values[(idx, i, j)] = jet_eval(f, pt, i, j)
    return JetData(x0, p0, m, n, values)
