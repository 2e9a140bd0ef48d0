"""Text formats for inputs and canonical formatting for outputs.

Scalar files carry one element per line, either an integer like -42 or a
fraction like 7/3 with positive denominator.  Point files carry one point
per line as two such tokens separated by whitespace.  Lines starting with
'#' and blank lines are ignored; duplicate entries are tolerated.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import EmptyInputError, ParseError
from .planar import PlanarPointSet
from .scalar_sets import Scalar, ScalarSet, as_scalar

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_scalar_token(token: str) -> Scalar:
    if not _SCALAR_RE.match(token):
        raise ParseError(f"malformed scalar {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {token!r}")
        return as_scalar(Fraction(int(num), int(den)))
    return int(token)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def parse_scalar_set(text: str) -> ScalarSet:
    vals = []
    for lineno, line in _content_lines(text):
        try:
            vals.append(parse_scalar_token(line))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    if not vals:
        raise EmptyInputError("no elements in input")
    return ScalarSet(vals)


def parse_point_set(text: str) -> PlanarPointSet:
    pts = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'x y', got {line!r}", line=lineno)
        try:
            pts.append((parse_scalar_token(parts[0]), parse_scalar_token(parts[1])))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    if not pts:
        raise EmptyInputError("no points in input")
    return PlanarPointSet(pts)


def format_scalar(value) -> str:
    # str() of int and Fraction is already the exact wire form
    return str(value)


def format_point(point) -> str:
    return f"{point[0]} {point[1]}"


def scalar_set_to_text(s: ScalarSet) -> str:
    return "".join(f"{format_scalar(x)}\n" for x in s.elements)


def point_set_to_text(p: PlanarPointSet) -> str:
    return "".join(f"{format_point(pt)}\n" for pt in p.points)
