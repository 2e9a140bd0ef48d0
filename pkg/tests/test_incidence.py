import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from distsym.bisectors import bisector_weight_map
from distsym.errors import CapExceededError, MismatchedInputsError
from distsym.families import FamilySpec, generate_family, random_rational_point_set
from distsym.incidence import (
    isosceles_count,
    isosceles_count_brute,
    st_bound_report,
    weighted_incidences,
)
from distsym.planar import PlanarPointSet

TRIANGLE = PlanarPointSet([(0, 0), (1, 0), (0, 1)])

coords = st.one_of(
    st.integers(min_value=-60, max_value=60),
    st.fractions(min_value=-20, max_value=20, max_denominator=5),
)
small_point_sets = st.lists(
    st.tuples(coords, coords), min_size=2, max_size=14, unique=True
).map(PlanarPointSet)


def test_fixture_counts():
    assert isosceles_count(TRIANGLE) == 2
    assert isosceles_count_brute(TRIANGLE) == 2
    collinear = PlanarPointSet([(0, 0), (1, 0), (2, 0)])
    assert isosceles_count(collinear) == 2
    grid3 = generate_family(FamilySpec(kind="grid", n=3))
    assert isosceles_count(grid3) == 88
    assert isosceles_count_brute(grid3) == 88


def test_two_points_have_no_triples():
    assert isosceles_count(PlanarPointSet([(0, 0), (5, 1)])) == 0


def test_brute_cap():
    p = PlanarPointSet([(i, i * i) for i in range(12)])
    with pytest.raises(CapExceededError):
        isosceles_count_brute(p, cap=10)
    # explicit cap raise lets the same input through
    assert isosceles_count_brute(p, cap=12) == isosceles_count(p)


@settings(max_examples=40, deadline=None)
@given(small_point_sets)
def test_routes_agree(p):
    t = isosceles_count(p)
    assert t == isosceles_count_brute(p)
    assert t == weighted_incidences(p, bisector_weight_map(p))
    assert t % 2 == 0  # (p,q,s) and (q,p,s) pair up


def test_weighted_incidences_rejects_foreign_map():
    other = PlanarPointSet([(0, 0), (3, 1), (2, 2)])
    with pytest.raises(MismatchedInputsError):
        weighted_incidences(TRIANGLE, bisector_weight_map(other))
    with pytest.raises(MismatchedInputsError):
        st_bound_report(TRIANGLE, bisector_weight_map(other))


def test_incidence_scan_handles_rational_points():
    rng = random.Random(23)
    for _ in range(10):
        p = random_rational_point_set(rng, rng.randint(2, 12))
        wm = bisector_weight_map(p)
        assert weighted_incidences(p, wm) == isosceles_count(p)


def test_triangle_st_report():
    rep = st_bound_report(TRIANGLE, bisector_weight_map(TRIANGLE))
    assert rep.n == 3
    assert rep.triples == rep.weighted == 2
    assert rep.total_weight == 6
    assert rep.max_weight == 2
    # rhs = cbrt(2 * (3*6)^2) + 6 + 2*3 sits strictly between 20 and 21
    assert (rep.rhs_floor, rep.rhs_ceil) == (20, 21)
    assert rep.low_multiplicity_classes == 8
    assert rep.ratio.lo == Fraction(2, 21)
    assert rep.ratio.hi == Fraction(2, 20)


def test_st_rhs_terms_bracket_the_cube_root():
    rep = st_bound_report(TRIANGLE, bisector_weight_map(TRIANGLE))
    root, w_total, wn = rep.st_rhs_terms
    assert (w_total, wn) == (6, 6)
    assert root.lo**3 <= 648 <= root.hi**3  # 648 = 2 * (3*6)^2
    assert root.width <= Fraction(1, 10**8)
    assert rep.rhs_floor <= root.lo + w_total + wn <= rep.rhs_ceil


def test_grid3_st_report():
    g3 = generate_family(FamilySpec(kind="grid", n=3))
    rep = st_bound_report(g3, bisector_weight_map(g3))
    assert rep.triples == rep.weighted == 88
    assert rep.total_weight == 72
    assert rep.max_weight == 6
    assert (rep.rhs_floor, rep.rhs_ceil) == (262, 263)
    assert rep.low_multiplicity_classes == 28


@settings(max_examples=25, deadline=None)
@given(small_point_sets)
def test_st_report_internal_consistency(p):
    rep = st_bound_report(p, bisector_weight_map(p))
    assert rep.rhs_ceil - rep.rhs_floor in (0, 1)
    assert rep.weighted == rep.triples
    n = rep.n
    assert rep.total_weight == n * n - n
    assert 0 <= rep.low_multiplicity_classes
    # floor and ceil really bracket cbrt(w_max (N W)^2) + W + w_max N
    base = rep.total_weight + rep.max_weight * n
    cube = rep.max_weight * (n * rep.total_weight) ** 2
    root = rep.rhs_floor - base
    assert root**3 <= cube < (root + 1) ** 3
    assert rep.rhs_ceil == base + (root if root**3 == cube else root + 1)
