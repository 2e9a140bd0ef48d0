"""Equal-distance triple counts along three independent routes, plus the
weighted point-line incidence report.

T counts ordered triples (p, q, s) with p != q and |p - s| = |q - s|.  The
same number falls out of per-centre radius multiplicities (sum of m(m-1)),
out of a literal cubic loop, and out of scanning the weighted bisector map
against the point set; the routes share no counting logic, which is what
makes their agreement worth testing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .bisectors import WeightedBisectorMap
from .brackets import Bracket, int_nth_root, nth_root_bracket
from .errors import CapExceededError, EmptyInputError, MismatchedInputsError
from .planar import PlanarPointSet, radius_multiplicity_map, squared_distance_set

BRUTE_CAP_DEFAULT = 60
_SCAN_WORK_LIMIT = 10 ** 8
_BLOCK = 1 << 22


def _iter_run_lengths(xs: np.ndarray, ys: np.ndarray):
    """Per block of centres: lengths of equal-value runs in each sorted row of
    squared distances.  A run of length m is one (centre, radius) class."""
    n = len(xs)
    block = max(1, _BLOCK // n)
    for i in range(0, n, block):
        dx = xs[i : i + block, None] - xs[None, :]
        dy = ys[i : i + block, None] - ys[None, :]
        d2 = dx * dx + dy * dy
        d2.sort(axis=1)
        flat = d2.ravel()
        starts = np.zeros(flat.size, dtype=bool)
        starts[::n] = True  # row boundaries never merge runs
        starts[1:] |= flat[1:] != flat[:-1]
        run_starts = np.flatnonzero(starts)
        yield np.diff(np.append(run_starts, flat.size))


def isosceles_count(p: PlanarPointSet) -> int:
    """T via radius multiplicities, O(N^2): sum over classes of m(m-1)."""
    if not p:
        raise EmptyInputError("triple count of an empty point set")
    scaled = p.scaled_int_coords()
    if scaled is not None:
        return sum(int((lens * (lens - 1)).sum()) for lens in _iter_run_lengths(scaled[0], scaled[1]))
    rmap = radius_multiplicity_map(p)
    return sum(m * (m - 1) for counts in rmap.by_center.values() for m in counts.values())


def isosceles_count_brute(p: PlanarPointSet, cap: int = BRUTE_CAP_DEFAULT) -> int:
    """T via the literal cubic loop; refuses sets larger than cap.

    Rational coordinates are cleared to a common integer grid first.  That
    single dilation preserves every equality of squared distances, and the
    loop below stays a plain triple enumeration.
    """
    if not p:
        raise EmptyInputError("triple count of an empty point set")
    if cap is not None and len(p) > cap:
        raise CapExceededError(f"brute-force triple count capped at {cap} points")
    coords, _ = _integer_coords(p)
    n = len(coords)
    count = 0
    for si in range(n):
        sx, sy = coords[si]
        for pi in range(n):
            px, py = coords[pi]
            dps = (px - sx) ** 2 + (py - sy) ** 2
            for qi in range(n):
                if qi == pi:
                    continue
                qx, qy = coords[qi]
                if (qx - sx) ** 2 + (qy - sy) ** 2 == dps:
                    count += 1
    return count


def _integer_coords(p: PlanarPointSet):
    """(coords, L): coordinates times the common denominator L, as Python ints."""
    lcm = 1
    for x, y in p.points:
        if isinstance(x, Fraction):
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        if isinstance(y, Fraction):
            lcm = lcm * y.denominator // math.gcd(lcm, y.denominator)
    out = []
    for x, y in p.points:
        xi = x * lcm if isinstance(x, int) else x.numerator * (lcm // x.denominator)
        yi = y * lcm if isinstance(y, int) else y.numerator * (lcm // y.denominator)
        out.append((xi, yi))
    return out, lcm


def _check_map(p: PlanarPointSet, wmap: WeightedBisectorMap) -> None:
    if wmap.source_points != p.points:
        raise MismatchedInputsError("weight map does not belong to this point set")


def weighted_incidences(p: PlanarPointSet, wmap: WeightedBisectorMap) -> int:
    """I_w: sum of w(l) over incident (point, line) pairs, by scanning every
    line in the map against every point."""
    if not p:
        raise EmptyInputError("incidence scan of an empty point set")
    _check_map(p, wmap)
    scaled = p.scaled_int_coords()
    arrays = wmap.line_arrays()
    if scaled is not None and arrays is not None:
        total = _incidence_scan_np(scaled, arrays)
        if total is not None:
            return total
    # object scan; clearing denominators keeps every test in integers
    coords, lcm = _integer_coords(p)
    total = 0
    for line, w in wmap.items():
        a, b, c = line
        c_scaled = c * lcm
        hits = 0
        for ux, uy in coords:
            if a * ux + b * uy + c_scaled == 0:
                hits += 1
        total += w * hits
    return total


def _incidence_scan_np(scaled, arrays) -> Optional[int]:
    xs, ys, lcm = scaled
    lines, weights = arrays
    if len(lines) == 0:
        return 0
    mags = np.abs(lines).max(axis=0)
    coord_bound = int(max(np.abs(xs).max(), np.abs(ys).max(), 1))
    reach = (int(mags[0]) + int(mags[1])) * coord_bound + int(mags[2]) * lcm
    if reach >= 1 << 62:
        return None
    cl = lines[:, 2] * lcm
    total = 0
    block = max(1, _BLOCK // max(len(xs), 1))
    for i in range(0, len(lines), block):
        vals = (
            lines[i : i + block, 0:1] * xs[None, :]
            + lines[i : i + block, 1:2] * ys[None, :]
            + cl[i : i + block, None]
        )
        hits = (vals == 0).sum(axis=1)
        total += int(weights[i : i + block] @ hits)
    return total


@dataclass(frozen=True)
class IncidenceReport:
    """Everything the incidence bound needs, with the irrational term held as
    an integer floor/ceil pair so the ratio is decided without floats."""

    n: int
    triples: int
    weighted: int
    total_weight: int
    max_weight: int
    rhs_floor: int
    rhs_ceil: int
    low_multiplicity_classes: int

    @property
    def ratio(self) -> Bracket:
        return Bracket(
            Fraction(self.weighted, self.rhs_ceil),
            Fraction(self.weighted, self.rhs_floor),
        )

    @property
    def st_rhs_terms(self) -> Tuple[Bracket, int, int]:
        """The three summands of the bound: the bracketed cube-root term,
        W_total, and w_max * N."""
        cube = Fraction(self.max_weight) * Fraction(self.n * self.total_weight) ** 2
        return (
            nth_root_bracket(cube, 3, digits=8),
            self.total_weight,
            self.max_weight * self.n,
        )


def st_bound_report(
    p: PlanarPointSet,
    wmap: WeightedBisectorMap,
    scan_work_limit: int = _SCAN_WORK_LIMIT,
) -> IncidenceReport:
    """Compare I_w against w^(1/3) (N W)^(2/3) + W + w N.

    The cube root is bracketed by exact integer roots of w (N W)^2.  Past
    scan_work_limit line-point tests the scan route is skipped and I_w falls
    back to the triple count (the identity T = I_w is enforced whenever both
    are computed, and is exercised exhaustively at oracle scale in tests).
    """
    _check_map(p, wmap)
    n = len(p)
    t = isosceles_count(p)
    if wmap.distinct_lines * n <= scan_work_limit:
        iw = weighted_incidences(p, wmap)
        if iw != t:
            raise RuntimeError("incidence identity violated: T != I_w")
    else:
        iw = t
    w_total, w_max = wmap.total_weight, wmap.max_weight
    cube = w_max * (n * w_total) ** 2
    root = int_nth_root(cube, 3)
    ceil_root = root if root ** 3 == cube else root + 1
    base = w_total + w_max * n
    return IncidenceReport(
        n=n,
        triples=t,
        weighted=iw,
        total_weight=w_total,
        max_weight=w_max,
        rhs_floor=root + base,
        rhs_ceil=ceil_root + base,
        low_multiplicity_classes=_low_multiplicity_classes(p),
    )


def _low_multiplicity_classes(p: PlanarPointSet) -> int:
    """(centre, radius) pairs over radius in d(P) (zero included) hitting at
    most one point; empty classes count, so this is N |d(P)| minus the rich
    classes."""
    n = len(p)
    d_count = len(squared_distance_set(p, include_zero=True).squared)
    scaled = p.scaled_int_coords()
    if scaled is not None:
        rich = sum(int((lens >= 2).sum()) for lens in _iter_run_lengths(scaled[0], scaled[1]))
    else:
        rmap = radius_multiplicity_map(p)
        rich = sum(
            1 for counts in rmap.by_center.values() for m in counts.values() if m >= 2
        )
    return n * d_count - rich
