from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hdiagram.clopen import (
    INFINITY,
    INTEGERS,
    ONE_SIDED,
    TWO_SIDED,
    BackendMismatchError,
    BitwiseNot,
    EventuallyPeriodic,
    IntegerAdd,
    IntegerSet,
    LabelError,
    Odometer,
    OneSidedSet,
    PeriodicSequence,
    Shift,
    TwoSidedSet,
    contains,
    diameter,
    image,
    integer_distance,
    intersect,
    is_empty,
    union,
    union_all,
)
from oracles import one_sided_members, two_sided_members, words

shift, tau, ad, add = Shift(), BitwiseNot(), Odometer(), IntegerAdd()
cyl, ocyl, ints = TWO_SIDED.parse, ONE_SIDED.parse, INTEGERS.parse


# -- strategies ----------------------------------------------------------------


@st.composite
def two_sided_sets(draw, max_radius=4):
    r = draw(st.integers(0, max_radius))
    pool = words(2 * r + 1)
    chosen = draw(st.lists(st.sampled_from(pool), max_size=min(len(pool), 24), unique=True))
    return TwoSidedSet(r, frozenset(chosen))


@st.composite
def one_sided_sets(draw, max_length=6):
    n = draw(st.integers(0, max_length))
    pool = words(n)
    chosen = draw(st.lists(st.sampled_from(pool), max_size=len(pool), unique=True))
    return OneSidedSet(n, frozenset(chosen))


integer_sets = st.builds(
    IntegerSet, st.frozensets(st.integers(-8, 8), max_size=6), st.booleans()
)


# -- examples ------------------------------------------------------------------


def test_shift_image_of_cylinder():
    z = cyl("00[1]0")
    assert image(shift, z, 1) == cyl("001[0]")
    assert image(shift, z, 1).label() == "001[0]***"
    assert image(shift, z, 0) == z


def test_shift_moves_window_both_ways():
    z = cyl("[1]")
    assert image(shift, z, 1) == cyl("1[*]")
    assert image(shift, z, -1) == cyl("[*]1")


def test_odometer_examples():
    assert image(ad, ocyl("[1]0"), 1) == ocyl("[0]1")
    assert image(ad, ocyl("[0]0"), 1) == ocyl("[1]0")
    assert image(ad, ocyl("[1]1"), 1) == ocyl("[0]0")


def test_intersection_examples():
    assert intersect(cyl("[0]"), image(shift, cyl("[0]"), 1)) == cyl("0[0]")
    z = cyl("01[1]")
    assert intersect(z, TWO_SIDED.whole()) == z
    assert intersect(IntegerSet.finite([0, 1]), IntegerSet.excluding([0])) == IntegerSet.finite([1])
    assert is_empty(cyl("[0]") & cyl("[1]"))


def test_diameters():
    assert diameter(IntegerSet.v(2)) == Fraction(6, 16)
    for n in range(8):
        assert diameter(IntegerSet.v(n)) == Fraction(2 * n + 2, (n + 2) ** 2)
    assert diameter(cyl("0[1]1")) == Fraction(1, 4)
    assert diameter(cyl("[1]")) == Fraction(1, 2)
    assert diameter(TWO_SIDED.whole()) == 1
    assert diameter(ocyl("[0]1")) == Fraction(1, 4)
    assert diameter(IntegerSet.finite([3])) == 0


def test_integer_metric():
    assert integer_distance(0, INFINITY) == 1
    assert integer_distance(1, 2) == Fraction(1, 6)
    assert integer_distance(-3, INFINITY) == Fraction(1, 4)


def test_contains_is_reflexive_and_directed():
    z = cyl("1[0]1")
    assert contains(z, z)
    assert contains(cyl("[0]"), z)
    assert not contains(z, cyl("[0]"))


def test_backend_mismatch():
    with pytest.raises(BackendMismatchError):
        cyl("[0]") & ocyl("[0]")
    with pytest.raises(BackendMismatchError):
        image(ad, cyl("[0]"), 1)
    with pytest.raises(BackendMismatchError):
        contains(IntegerSet.v(1), cyl("[0]"))


def test_canonical_form_shrinks_window():
    assert TwoSidedSet(2, frozenset(a + "1" + b for a in words(2) for b in words(2))) == cyl("[1]")
    assert cyl("*[1]*").size == 0
    assert OneSidedSet(3, frozenset(["100", "101"])) == ocyl("[1]0")


@pytest.mark.parametrize(
    "label",
    ["01[1]01", "[0]", "X", "empty", "0[0]1|1[1]0", "1*[0]"],
)
def test_two_sided_label_round_trip(label):
    assert cyl(cyl(label).label()) == cyl(label)


@pytest.mark.parametrize("label", ["{3}", "{-1,2}", "V(2)", "V{0,5}", "X", "empty"])
def test_integer_label_round_trip(label):
    z = ints(label)
    assert z.label() == label
    assert ints(z.label()) == z


def test_one_sided_labels():
    assert ocyl("[1]01").label() == "[1]01"
    assert ONE_SIDED.whole().label() == "X"


def test_bad_labels():
    for text in ["01", "[2]", "0[1", "[01]"]:
        with pytest.raises(LabelError):
            cyl(text)
    with pytest.raises(LabelError):
        ints("V(-1)")


def test_points():
    p = PeriodicSequence("0101")
    assert p.block == "01"
    assert p.window(1) == "101"
    assert shift.apply(p) == PeriodicSequence("10")
    assert cyl("1[0]1").contains_point(p)
    x = EventuallyPeriodic("1", "0")
    assert ad.apply(x) == EventuallyPeriodic("01", "0")
    assert ad.apply(EventuallyPeriodic("", "1")) == EventuallyPeriodic("", "0")
    assert ad.apply(ad.apply(x), -1) == x
    assert add.apply(INFINITY) == INFINITY
    assert IntegerSet.v(3).contains_point(INFINITY)


def test_union_all_matches_pairwise_union():
    sets = [cyl("[0]"), cyl("1[1]1"), cyl("01[1]"), cyl("1[1]0")]
    acc = TWO_SIDED.empty()
    for z in sets:
        acc = union(acc, z)
    assert union_all(sets, TWO_SIDED) == acc
    assert union_all([], INTEGERS) == INTEGERS.empty()


def test_partition_violations():
    assert TWO_SIDED.partition_violations((cyl("[0]"), cyl("[1]"))) == []
    assert TWO_SIDED.partition_violations((cyl("[0]"),))
    assert TWO_SIDED.partition_violations((cyl("[0]"), cyl("[*]")))
    assert INTEGERS.partition_violations((IntegerSet.finite([0]), IntegerSet.v(0))) == []
    assert INTEGERS.partition_violations((IntegerSet.finite([0]), IntegerSet.v(1)))
    assert INTEGERS.partition_violations((IntegerSet.finite([0]), IntegerSet.finite([1])))


# -- properties ----------------------------------------------------------------


@settings(max_examples=200)
@given(two_sided_sets(), two_sided_sets(), two_sided_sets())
def test_two_sided_algebra_against_membership(a, b, c):
    m = lambda z: two_sided_members(z, 6)  # noqa: E731
    assert m(a & b) == m(a) & m(b)
    assert m(a | b) == m(a) | m(b)
    assert m(a - b) == m(a) - m(b)
    assert m(~a) == frozenset(words(13)) - m(a)
    assert (a & b) & c == a & (b & c)
    assert a & b == b & a
    assert a & TWO_SIDED.whole() == a
    assert a | (a & b) == a
    assert a.issubset(b) == (m(a) <= m(b))
    assert a.is_empty() == (not m(a))


@settings(max_examples=200)
@given(one_sided_sets(), one_sided_sets())
def test_one_sided_algebra_against_membership(a, b):
    m = lambda z: one_sided_members(z, 8)  # noqa: E731
    assert m(a & b) == m(a) & m(b)
    assert m(a | b) == m(a) | m(b)
    assert m(~a) == frozenset(words(8)) - m(a)
    assert a.issubset(b) == (m(a) <= m(b))


@given(integer_sets, integer_sets)
def test_integer_algebra_against_membership(a, b):
    points = [INFINITY, *range(-12, 13)]
    m = lambda z: {p for p in points if z.contains_point(p)}  # noqa: E731
    assert m(a & b) == m(a) & m(b)
    assert m(a | b) == m(a) | m(b)
    assert m(~a) == set(points) - m(a)
    assert a.issubset(b) == (m(a) <= m(b))


@given(two_sided_sets(), st.integers(-3, 3))
def test_shift_image_is_bijective(z, k):
    assert image(shift, image(shift, z, k), -k) == z
    assert image(shift, image(shift, z, k), 1) == image(shift, z, k + 1)


@given(two_sided_sets(), st.lists(st.sampled_from("01"), min_size=1, max_size=4))
def test_shift_image_membership(z, block):
    p = PeriodicSequence("".join(block))
    # x in shift(z) iff shift^-1(x) in z
    assert image(shift, z, 1).contains_point(p) == z.contains_point(shift.apply(p, -1))


@given(one_sided_sets(), st.integers(-5, 5))
def test_odometer_image_is_bijective(z, k):
    assert image(ad, image(ad, z, k), -k) == z


@given(integer_sets, st.integers(-4, 4))
def test_add_image_is_bijective_and_keeps_infinity(z, k):
    assert image(add, image(add, z, k), -k) == z
    assert image(add, z, k).cofinite == z.cofinite


@given(two_sided_sets())
def test_not_is_an_involution(z):
    assert image(tau, image(tau, z, 1), 1) == z
    assert image(tau, z, 1) == image(tau, z, -1)


@given(two_sided_sets(max_radius=3))
def test_canonical_form_is_unique(z):
    wider = TwoSidedSet(z.size + 1, z.words_at(z.size + 1))
    assert wider == z
    assert hash(wider) == hash(z)
    assert cyl(z.label()) == z
