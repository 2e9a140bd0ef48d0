"""Planar point sets with exact coordinates and their squared-distance data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

import numpy as np

from .errors import EmptyInputError
from .scalar_sets import (
    _CHUNK,
    _UNSET,
    Scalar,
    ScalarSet,
    as_scalar,
    difference_set,
    elementwise_square,
    iterated_combination,
)

Point = Tuple[Scalar, Scalar]

# squared distances reach 8 * M^2 for scaled magnitude M; this keeps them
# (and every bisector coefficient) inside exact int64
_COORD_LIMIT = 1 << 29


def as_point(value) -> Point:
    x, y = value
    return (as_scalar(x), as_scalar(y))


class PlanarPointSet:
    """Deduplicated point set in lexicographic (x, y) order."""

    __slots__ = ("_points", "_members", "_scaled")

    def __init__(self, points: Iterable = ()):
        self._points = tuple(sorted({as_point(p) for p in points}))
        self._members = None
        self._scaled = _UNSET

    @classmethod
    def _from_sorted(cls, points) -> "PlanarPointSet":
        s = cls.__new__(cls)
        s._points = tuple(points)
        s._members = None
        s._scaled = _UNSET
        return s

    @property
    def points(self) -> tuple:
        return self._points

    def scaled_int_coords(self):
        """(xs, ys, L) with coordinates cleared to integers by the common
        denominator L, as int64 arrays, or None past the exact-int64 guard."""
        if self._scaled is _UNSET:
            self._scaled = self._compute_scaled()
        return self._scaled

    def _compute_scaled(self):
        if not self._points:
            return None
        lcm = 1
        for x, y in self._points:
            if isinstance(x, Fraction):
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            if isinstance(y, Fraction):
                lcm = lcm * y.denominator // math.gcd(lcm, y.denominator)
            if lcm > _COORD_LIMIT:
                return None
        xs, ys = [], []
        bound = 0
        for x, y in self._points:
            xi = x * lcm if isinstance(x, int) else x.numerator * (lcm // x.denominator)
            yi = y * lcm if isinstance(y, int) else y.numerator * (lcm // y.denominator)
            xs.append(xi)
            ys.append(yi)
            bound = max(bound, abs(xi), abs(yi))
        if bound > _COORD_LIMIT:
            return None
        return (
            np.array(xs, dtype=np.int64),
            np.array(ys, dtype=np.int64),
            lcm,
        )

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __bool__(self):
        return bool(self._points)

    def __contains__(self, point):
        if self._members is None:
            self._members = frozenset(self._points)
        return point in self._members

    def __eq__(self, other):
        if isinstance(other, PlanarPointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f"PlanarPointSet(n={len(self._points)})"


@dataclass(frozen=True)
class DistanceSet:
    """Distinct squared distances of a point set under a zero convention."""

    squared: ScalarSet
    includes_zero: bool

    def __len__(self):
        return len(self.squared)


def cartesian_square(a: ScalarSet) -> PlanarPointSet:
    """All points (x, y) with both coordinates drawn from a."""
    if not a:
        raise EmptyInputError("cartesian square of an empty set")
    elems = a.elements
    return PlanarPointSet._from_sorted((x, y) for x in elems for y in elems)


def _pairwise_sq_dist_unique(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    n = len(xs)
    block = max(1, _CHUNK // n)
    parts = []
    for i in range(0, n, block):
        dx = xs[i : i + block, None] - xs[None, :]
        dy = ys[i : i + block, None] - ys[None, :]
        parts.append(np.unique(dx * dx + dy * dy))
        if len(parts) >= 12:
            parts = [np.unique(np.concatenate(parts))]
    out = parts[0] if len(parts) == 1 else np.unique(np.concatenate(parts))
    return out[out > 0]  # zeros come only from the diagonal


def squared_distance_set(p: PlanarPointSet, include_zero: bool = True) -> DistanceSet:
    """Distinct values |u - v|^2 over point pairs; 0 kept iff include_zero."""
    if not p:
        raise EmptyInputError("distance set of an empty point set")
    scaled = p.scaled_int_coords()
    if scaled is not None:
        xs, ys, lcm = scaled
        vals = _pairwise_sq_dist_unique(xs, ys)
        if lcm == 1:
            elems = vals.tolist()
        else:
            l2 = lcm * lcm
            # dividing by l2 is monotone, so sorted order survives the map
            elems = [as_scalar(Fraction(int(v), l2)) for v in vals.tolist()]
        if include_zero:
            elems.insert(0, 0)
        return DistanceSet(ScalarSet._from_sorted(elems), include_zero)
    pts = p.points
    vals = set()
    for i in range(len(pts)):
        xi, yi = pts[i]
        for j in range(i + 1, len(pts)):
            dx = xi - pts[j][0]
            dy = yi - pts[j][1]
            vals.add(dx * dx + dy * dy)
    if include_zero:
        vals.add(0)
    return DistanceSet(ScalarSet(vals), include_zero)


def verify_product_identity(a: ScalarSet):
    """Squared distances of a x a versus the two-fold sumset of the squared
    difference set; returns (agree, distance_side, sumset_side).

    The two sides are computed along fully independent routes and must be
    equal for every nonempty a.
    """
    lhs = squared_distance_set(cartesian_square(a), include_zero=True).squared
    rhs = iterated_combination(2, 0, elementwise_square(difference_set(a)))
    return lhs == rhs, lhs, rhs


@dataclass(frozen=True)
class RadiusMultiplicityMap:
    """Per-centre multiplicities of squared circle radii; r = 0 is included,
    every centre sees itself once."""

    by_center: Dict[Point, Dict[Scalar, int]]

    def total(self) -> int:
        return sum(sum(m.values()) for m in self.by_center.values())


def radius_multiplicity_map(p: PlanarPointSet) -> RadiusMultiplicityMap:
    if not p:
        raise EmptyInputError("radius multiplicities of an empty point set")
    out = {}
    pts = p.points
    for s in pts:
        sx, sy = s
        counts: Dict[Scalar, int] = {}
        for x, y in pts:
            dx = x - sx
            dy = y - sy
            r2 = dx * dx + dy * dy
            counts[r2] = counts.get(r2, 0) + 1
        out[s] = counts
    return RadiusMultiplicityMap(out)
