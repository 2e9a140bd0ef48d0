"""Perpendicular bisectors in canonical integer form, the weighted bisector
multiset of a point set, and extraction of its heaviest mirror symmetry.

The bisector of distinct points p, q is the locus |x - p|^2 = |x - q|^2,
which rearranges to the linear equation

    2(qx - px) X + 2(qy - py) Y + (|p|^2 - |q|^2) = 0.

Clearing denominators, dividing by the gcd and forcing the first nonzero of
(a, b) positive makes the triple (a, b, c) a unique key for the line, so
weights can be accumulated in a plain map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

import numpy as np

from .errors import (
    DegeneratePairError,
    EmptyInputError,
    MismatchedInputsError,
    TooFewPointsError,
)
from .planar import PlanarPointSet, Point, as_point
from .scalar_sets import _CHUNK, as_scalar


class Line(NamedTuple):
    """ax + by + c = 0 with integer a, b, c, gcd(|a|,|b|,|c|) = 1 and the
    first nonzero of (a, b) positive."""

    a: int
    b: int
    c: int


def canonical_line(a, b, c) -> Line:
    """Normalise rational coefficients of a nondegenerate line to the unique
    canonical triple; any rational multiple of the equation yields the same."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    if a == 0 and b == 0:
        raise ValueError("degenerate line: a = b = 0")
    lcm = 1
    for v in (a, b, c):
        if isinstance(v, Fraction):
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ai, bi, ci = (int(v * lcm) for v in (a, b, c))
    g = math.gcd(math.gcd(abs(ai), abs(bi)), abs(ci))
    ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return Line(ai, bi, ci)


def perpendicular_bisector(p, q) -> Line:
    """Canonical form of the locus equidistant from two distinct points."""
    p, q = as_point(p), as_point(q)
    if p == q:
        raise DegeneratePairError("coincident points have no bisector")
    px, py = p
    qx, qy = q
    return canonical_line(
        2 * (qx - px),
        2 * (qy - py),
        (px * px + py * py) - (qx * qx + qy * qy),
    )


def reflect_point(line: Line, p) -> Point:
    """Mirror image of p across the line; exact and involutive."""
    x, y = as_point(p)
    a, b, c = line
    t = Fraction(a * x + b * y + c, a * a + b * b)
    return (as_scalar(x - 2 * a * t), as_scalar(y - 2 * b * t))


def point_on_line(line: Line, p) -> bool:
    x, y = p
    return line.a * x + line.b * y + line.c == 0


class WeightedBisectorMap:
    """w(l) = number of ordered pairs of distinct points whose bisector is l.

    Large integer inputs are held as lex-sorted coefficient arrays; the dict
    view materialises only on demand.  Weights are even and sum to N^2 - N.
    """

    __slots__ = ("n_points", "source_points", "total_weight", "max_weight",
                 "_dict", "_lines", "_weights")

    def __init__(self, source_points: Tuple[Point, ...],
                 weights: Optional[Dict[Line, int]] = None,
                 arrays: Optional[Tuple[np.ndarray, np.ndarray]] = None):
        if (weights is None) == (arrays is None):
            raise ValueError("exactly one backing store expected")
        self.source_points = source_points
        self.n_points = len(source_points)
        self._dict = weights
        if arrays is not None:
            self._lines, self._weights = arrays
            self.total_weight = int(self._weights.sum())
            self.max_weight = int(self._weights.max())
        else:
            self._lines = self._weights = None
            self.total_weight = sum(weights.values())
            self.max_weight = max(weights.values())

    @property
    def distinct_lines(self) -> int:
        if self._dict is not None:
            return len(self._dict)
        return len(self._weights)

    def __len__(self):
        return self.distinct_lines

    def items(self) -> Iterator[Tuple[Line, int]]:
        if self._dict is not None:
            yield from self._dict.items()
        else:
            for row, w in zip(self._lines, self._weights):
                yield Line(int(row[0]), int(row[1]), int(row[2])), int(w)

    def weights(self) -> Dict[Line, int]:
        if self._dict is None:
            self._dict = dict(self.items())
        return self._dict

    def __getitem__(self, line: Line) -> int:
        return self.weights()[line]

    def line_arrays(self):
        """(lines, weights) int64 arrays with rows in numeric lex order, or
        None when the map was built on the exact object path."""
        if self._lines is None:
            return None
        return self._lines, self._weights


def bisector_weight_map(p: PlanarPointSet) -> WeightedBisectorMap:
    """Accumulate bisector weights over all ordered pairs of distinct points."""
    n = len(p)
    if n < 2:
        raise TooFewPointsError("bisector weights need at least two points")
    scaled = p.scaled_int_coords()
    if scaled is not None and scaled[2] == 1:
        # integer coordinates: line coefficients stay within the int64 guard
        return _weight_map_np(p, scaled[0], scaled[1])
    return _weight_map_exact(p)


def _pair_blocks(n: int, target: int):
    """Index arrays (ii, jj) covering every i < j pair in bounded batches."""
    i = 0
    while i < n:
        rows = []
        total = 0
        while i < n and total < target:
            rows.append(i)
            total += n - i - 1
            i += 1
        ii = np.concatenate([np.full(n - r - 1, r, dtype=np.int64) for r in rows])
        jj = np.concatenate([np.arange(r + 1, n, dtype=np.int64) for r in rows])
        if len(ii):
            yield ii, jj


def _weight_map_np(p: PlanarPointSet, xs: np.ndarray, ys: np.ndarray) -> WeightedBisectorMap:
    n = len(p)
    parts_a, parts_b, parts_c = [], [], []
    sq = xs * xs + ys * ys
    for ii, jj in _pair_blocks(n, _CHUNK):
        a = 2 * (xs[jj] - xs[ii])
        b = 2 * (ys[jj] - ys[ii])
        c = sq[ii] - sq[jj]
        g = np.gcd(np.gcd(np.abs(a), np.abs(b)), np.abs(c))
        a //= g
        b //= g
        c //= g
        neg = (a < 0) | ((a == 0) & (b < 0))
        np.negative(a, where=neg, out=a)
        np.negative(b, where=neg, out=b)
        np.negative(c, where=neg, out=c)
        parts_a.append(a)
        parts_b.append(b)
        parts_c.append(c)
    a = np.concatenate(parts_a)
    b = np.concatenate(parts_b)
    c = np.concatenate(parts_c)
    order = np.lexsort((c, b, a))
    a, b, c = a[order], b[order], c[order]
    new = np.empty(len(a), dtype=bool)
    new[0] = True
    np.logical_or(a[1:] != a[:-1], b[1:] != b[:-1], out=new[1:])
    np.logical_or(new[1:], c[1:] != c[:-1], out=new[1:])
    starts = np.flatnonzero(new)
    counts = np.diff(np.append(starts, len(a)))
    lines = np.stack([a[starts], b[starts], c[starts]], axis=1)
    wmap = WeightedBisectorMap(p.points, arrays=(lines, 2 * counts))
    if wmap.total_weight != n * n - n:
        raise RuntimeError("bisector weights failed the pair-count identity")
    return wmap


def _weight_map_exact(p: PlanarPointSet) -> WeightedBisectorMap:
    pts = p.points
    weights: Dict[Line, int] = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            line = perpendicular_bisector(pts[i], pts[j])
            weights[line] = weights.get(line, 0) + 2
    wmap = WeightedBisectorMap(pts, weights=weights)
    if wmap.total_weight != len(pts) ** 2 - len(pts):
        raise RuntimeError("bisector weights failed the pair-count identity")
    return wmap


def heaviest_bisector(wmap: WeightedBisectorMap) -> Tuple[Line, int]:
    """Line of maximum weight; ties break to the lexicographically least triple."""
    if wmap.distinct_lines == 0:
        raise EmptyInputError("empty bisector map")
    arrays = wmap.line_arrays()
    if arrays is not None:
        lines, weights = arrays
        idx = int(np.flatnonzero(weights == wmap.max_weight)[0])  # rows lex-sorted
        row = lines[idx]
        return Line(int(row[0]), int(row[1]), int(row[2])), wmap.max_weight
    best = min(line for line, w in wmap.items() if w == wmap.max_weight)
    return best, wmap.max_weight


@dataclass(frozen=True)
class SymmetricSubset:
    """A subset mapped into the ambient set by reflection across axis."""

    axis: Line
    subset: PlanarPointSet
    mirror: PlanarPointSet
    weight: int


def extract_symmetric_subset(
    p: PlanarPointSet,
    include_fixed_points: bool = False,
    weight_map: Optional[WeightedBisectorMap] = None,
) -> SymmetricSubset:
    """Points reflected back into p by its heaviest bisector.

    Fixed points of the reflection (points on the axis) are excluded unless
    include_fixed_points is set; without them the subset size equals the
    axis weight exactly, and that equality is checked before returning.
    """
    if len(p) < 2:
        raise TooFewPointsError("symmetry extraction needs at least two points")
    wmap = weight_map if weight_map is not None else bisector_weight_map(p)
    if wmap.source_points != p.points:
        raise MismatchedInputsError("weight map does not belong to this point set")
    axis, wmax = heaviest_bisector(wmap)
    paired = []
    fixed = []
    for pt in p:
        r = reflect_point(axis, pt)
        if r == pt:
            fixed.append(pt)
        elif r in p:
            paired.append((pt, r))
    if len(paired) != wmax:
        raise RuntimeError("axis weight disagrees with its reflection count")
    subset = [pt for pt, _ in paired]
    mirror = [r for _, r in paired]
    if include_fixed_points:
        subset += fixed
        mirror += fixed
    sub = PlanarPointSet(subset)
    mir = PlanarPointSet(mirror)
    for q in mir:
        if q not in p:
            raise RuntimeError("mirror image escaped the ambient point set")
    return SymmetricSubset(axis, sub, mir, wmax)
