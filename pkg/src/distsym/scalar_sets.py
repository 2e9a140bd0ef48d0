"""Exact finite-set algebra over the rationals.

Elements are Python ints and Fractions, so every operation is exact;
denominator-1 values are normalised to int.  Integer sets whose magnitudes
fit comfortably in int64 take vectorised numpy paths, everything else falls
back to the pure object path with identical results.  Floats are rejected
at the boundary.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Literal, Union

import numpy as np

from .errors import EmptyInputError

Scalar = Union[int, Fraction]
CombineOp = Literal["add", "subtract", "multiply"]

# int64 arithmetic stays exact as long as every intermediate fits; the
# per-operation guards below compare actual magnitudes against this margin.
_I64_LIMIT = 1 << 62
_CHUNK = 1 << 22

_UNSET = object()


def as_scalar(value) -> Scalar:
    """Normalise to the canonical exact form: int, or Fraction in lowest terms."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, np.integer):
        return int(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class ScalarSet:
    """Canonically sorted, deduplicated set of exact rationals."""

    __slots__ = ("_elems", "_members", "_i64")

    def __init__(self, values: Iterable = ()):
        self._elems = tuple(sorted({as_scalar(v) for v in values}))
        self._members = None
        self._i64 = _UNSET

    @classmethod
    def _from_sorted(cls, elems) -> "ScalarSet":
        # trusted constructor: canonical scalars, strictly increasing
        s = cls.__new__(cls)
        s._elems = tuple(elems)
        s._members = None
        s._i64 = _UNSET
        return s

    @property
    def elements(self) -> tuple:
        return self._elems

    @property
    def max_abs(self):
        if not self._elems:
            return 0
        return max(abs(self._elems[0]), abs(self._elems[-1]))

    def to_int64(self):
        """Sorted int64 array when every element is an int that fits, else None."""
        if self._i64 is _UNSET:
            if (
                self._elems
                and all(isinstance(x, int) for x in self._elems)
                and self.max_abs < _I64_LIMIT
            ):
                self._i64 = np.array(self._elems, dtype=np.int64)
            else:
                self._i64 = None
        return self._i64

    def issubset(self, other: "ScalarSet") -> bool:
        mine, theirs = self.to_int64(), other.to_int64()
        if mine is not None and theirs is not None:
            pos = np.searchsorted(theirs, mine)
            if np.any(pos >= len(theirs)):
                return False
            return bool(np.all(theirs[pos] == mine))
        if other._members is None:
            other._members = frozenset(other._elems)
        return all(x in other._members for x in self._elems)

    def __len__(self):
        return len(self._elems)

    def __iter__(self):
        return iter(self._elems)

    def __bool__(self):
        return bool(self._elems)

    def __contains__(self, value):
        if self._members is None:
            self._members = frozenset(self._elems)
        return as_scalar(value) in self._members

    def __eq__(self, other):
        if isinstance(other, ScalarSet):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self):
        return hash(self._elems)

    def __repr__(self):
        if len(self._elems) > 8:
            shown = ", ".join(map(str, self._elems[:8]))
            return f"ScalarSet([{shown}, ...] n={len(self._elems)})"
        return f"ScalarSet([{', '.join(map(str, self._elems))}])"


_PY_OPS = {"add": operator.add, "subtract": operator.sub, "multiply": operator.mul}
_NP_OPS = {"add": np.add, "subtract": np.subtract, "multiply": np.multiply}


def _require_nonempty(*sets: ScalarSet) -> None:
    for s in sets:
        if not s:
            raise EmptyInputError("operation requires nonempty input sets")


def _fast_pair(a: ScalarSet, b: ScalarSet, op: str):
    ua, ub = a.to_int64(), b.to_int64()
    if ua is None or ub is None:
        return None
    if op == "multiply":
        if a.max_abs * b.max_abs >= _I64_LIMIT:
            return None
    elif a.max_abs + b.max_abs >= _I64_LIMIT:
        return None
    return ua, ub


def _unique_outer(ua: np.ndarray, ub: np.ndarray, ufunc) -> np.ndarray:
    # pair-block enumeration, deduplicating incrementally to bound memory
    block = max(1, _CHUNK // len(ub))
    parts = []
    for i in range(0, len(ua), block):
        parts.append(np.unique(ufunc.outer(ua[i : i + block], ub).ravel()))
        if len(parts) >= 12:
            parts = [np.unique(np.concatenate(parts))]
    return parts[0] if len(parts) == 1 else np.unique(np.concatenate(parts))


def pairwise_combine(a: ScalarSet, b: ScalarSet, op: CombineOp) -> ScalarSet:
    """All values x op y over x in a, y in b, deduplicated."""
    if op not in _PY_OPS:
        raise ValueError(f"unknown combine op: {op!r}")
    _require_nonempty(a, b)
    fast = _fast_pair(a, b, op)
    if fast is not None:
        return ScalarSet._from_sorted(_unique_outer(fast[0], fast[1], _NP_OPS[op]).tolist())
    f = _PY_OPS[op]
    return ScalarSet(f(x, y) for x in a.elements for y in b.elements)


def difference_set(a: ScalarSet) -> ScalarSet:
    """All pairwise differences of a with itself; contains 0, symmetric about it."""
    _require_nonempty(a)
    ua = a.to_int64()
    if ua is not None and 2 * a.max_abs < _I64_LIMIT:
        return ScalarSet._from_sorted(_unique_outer(ua, ua, np.subtract).tolist())
    elems = a.elements
    return ScalarSet(x - y for x in elems for y in elems)


def iterated_combination(m: int, n: int, a: ScalarSet) -> ScalarSet:
    """m-fold sumset minus n-fold sumset of a, folded left one combine at a time."""
    if m < 0 or n < 0:
        raise ValueError("fold counts must be nonnegative")
    if m + n == 0:
        raise ValueError("m + n must be at least 1")
    _require_nonempty(a)
    if m >= 1:
        acc, adds, subs = a, m - 1, n
    else:
        # 0A - nA starts from the negated set and subtracts n - 1 more times
        acc, adds, subs = dilate(-1, a), 0, n - 1
    for _ in range(adds):
        acc = pairwise_combine(acc, a, "add")
    for _ in range(subs):
        acc = pairwise_combine(acc, a, "subtract")
    return acc


def dilate(scale, a: ScalarSet) -> ScalarSet:
    """Elementwise multiples {scale * x}; collapses to {0} when scale is 0."""
    _require_nonempty(a)
    lam = as_scalar(scale)
    if lam == 0:
        return ScalarSet._from_sorted([0])
    if isinstance(lam, int):
        ua = a.to_int64()
        if ua is not None and abs(lam) * a.max_abs < _I64_LIMIT:
            out = lam * ua
            if lam < 0:
                out = out[::-1]
            return ScalarSet._from_sorted(out.tolist())
    vals = [as_scalar(lam * x) for x in a.elements]
    if lam < 0:
        vals.reverse()
    return ScalarSet._from_sorted(vals)


def elementwise_square(a: ScalarSet) -> ScalarSet:
    """Squares of the elements; sign information collapses."""
    _require_nonempty(a)
    ua = a.to_int64()
    if ua is not None and a.max_abs ** 2 < _I64_LIMIT:
        return ScalarSet._from_sorted(np.unique(ua * ua).tolist())
    return ScalarSet(x * x for x in a.elements)


def ab_plus_c_set(a: ScalarSet, b: ScalarSet, c: ScalarSet) -> ScalarSet:
    """{x*y + z : x in a, y in b, z in c}, product set first, then the shift."""
    _require_nonempty(a, b, c)
    return pairwise_combine(pairwise_combine(a, b, "multiply"), c, "add")
