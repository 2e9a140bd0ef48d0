import operator
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from distsym.errors import EmptyInputError
from distsym.scalar_sets import (
    ScalarSet,
    ab_plus_c_set,
    as_scalar,
    difference_set,
    dilate,
    elementwise_square,
    iterated_combination,
    pairwise_combine,
)

scalars = st.one_of(
    st.integers(min_value=-10**6, max_value=10**6),
    st.fractions(min_value=-100, max_value=100, max_denominator=12),
)
scalar_sets = st.lists(scalars, min_size=1, max_size=24).map(ScalarSet)
small_sets = st.lists(scalars, min_size=1, max_size=10).map(ScalarSet)


def test_as_scalar_normalises_integral_fractions():
    assert as_scalar(Fraction(4, 2)) == 2
    assert isinstance(as_scalar(Fraction(4, 2)), int)
    assert as_scalar(Fraction(1, 3)) == Fraction(1, 3)


def test_as_scalar_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_construction_sorts_and_dedups():
    s = ScalarSet([3, 1, 1, Fraction(2, 1), 3])
    assert s.elements == (1, 2, 3)
    assert len(s) == 3
    assert 2 in s and 5 not in s


def test_difference_set_worked_example():
    assert difference_set(ScalarSet([0, 1, 3])).elements == (-3, -2, -1, 0, 1, 2, 3)


def test_pairwise_combine_worked_examples():
    a = ScalarSet([0, 1, 3])
    assert pairwise_combine(a, a, "add").elements == (0, 1, 2, 3, 4, 6)
    assert pairwise_combine(a, a, "multiply").elements == (0, 1, 3, 9)
    with pytest.raises(ValueError):
        pairwise_combine(a, a, "divide")


def test_iterated_combination_worked_examples():
    a = ScalarSet([0, 1])
    assert iterated_combination(2, 2, a).elements == (-2, -1, 0, 1, 2)
    assert iterated_combination(1, 0, a) == a
    assert iterated_combination(0, 1, a).elements == (-1, 0)
    assert iterated_combination(0, 2, a).elements == (-2, -1, 0)


def test_iterated_combination_rejects_bad_folds():
    a = ScalarSet([1])
    with pytest.raises(ValueError):
        iterated_combination(0, 0, a)
    with pytest.raises(ValueError):
        iterated_combination(-1, 2, a)


def test_dilate():
    a = ScalarSet([0, 1, 3])
    assert dilate(2, a).elements == (0, 2, 6)
    assert dilate(-1, a).elements == (-3, -1, 0)
    assert dilate(0, a).elements == (0,)
    assert dilate(Fraction(1, 2), a).elements == (0, Fraction(1, 2), Fraction(3, 2))


def test_elementwise_square():
    assert elementwise_square(ScalarSet([-2, 1, 3])).elements == (1, 4, 9)
    # squaring collapses sign pairs
    assert elementwise_square(ScalarSet([-1, 1])).elements == (1,)


def test_ab_plus_c():
    a = ScalarSet([0, 1])
    assert ab_plus_c_set(a, a, a).elements == (0, 1, 2)


def test_empty_inputs_raise():
    with pytest.raises(EmptyInputError):
        difference_set(ScalarSet([]))
    with pytest.raises(EmptyInputError):
        pairwise_combine(ScalarSet([]), ScalarSet([1]), "add")


def test_issubset():
    assert ScalarSet([1, 3]).issubset(ScalarSet([0, 1, 2, 3]))
    assert not ScalarSet([1, Fraction(7, 2)]).issubset(ScalarSet([1, 3]))


def test_huge_magnitudes_fall_back_to_exact_path():
    big = 10**25
    a = ScalarSet([0, big, -big])
    d = difference_set(a)
    assert d.elements == (-2 * big, -big, 0, big, 2 * big)
    p = pairwise_combine(a, a, "multiply")
    assert big * big in p and -(big * big) in p


@given(small_sets, small_sets)
def test_combine_matches_comprehension(a, b):
    for op, f in (("add", operator.add), ("subtract", operator.sub), ("multiply", operator.mul)):
        got = pairwise_combine(a, b, op).elements
        want = tuple(sorted({as_scalar(f(x, y)) for x in a.elements for y in b.elements}))
        assert got == want


@given(scalar_sets)
def test_difference_set_invariants(a):
    d = difference_set(a)
    assert 0 in d
    assert d.elements == tuple(-x for x in reversed(d.elements))
    assert len(d) >= 2 * len(a) - 1


@given(st.integers(min_value=2, max_value=40))
def test_difference_set_tight_on_progressions(n):
    ap = ScalarSet(range(0, 3 * n, 3))
    assert len(difference_set(ap)) == 2 * n - 1


@given(scalar_sets, scalar_sets)
def test_sumset_size_lower_bound(a, b):
    assert len(pairwise_combine(a, b, "add")) >= len(a) + len(b) - 1


@given(scalar_sets, scalars)
def test_dilate_preserves_cardinality(a, lam):
    if lam == 0:
        return
    assert len(dilate(lam, a)) == len(a)


@settings(max_examples=40)
@given(small_sets, st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_iterated_combination_matches_direct_enumeration(a, m, n):
    if m + n == 0 or m + n > 4:
        return
    got = iterated_combination(m, n, a)
    elems = a.elements
    acc = {0}
    for _ in range(m):
        acc = {x + y for x in acc for y in elems}
    for _ in range(n):
        acc = {x - y for x in acc for y in elems}
    assert set(got.elements) == {as_scalar(v) for v in acc}


def test_random_cross_check_numpy_vs_object_path():
    # adjoining 1/7 forces the object path; integer sums must survive unchanged
    rng = random.Random(4)
    for _ in range(25):
        xs = [rng.randint(-1000, 1000) for _ in range(rng.randint(1, 15))]
        a = ScalarSet(xs)
        b = ScalarSet(list(xs) + [Fraction(1, 7)])
        fast = pairwise_combine(a, a, "add")
        slow = pairwise_combine(b, b, "add")
        assert set(fast.elements) <= set(slow.elements)
        assert len(slow) == len(fast) + len(a) + 1
