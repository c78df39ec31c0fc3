from fractions import Fraction

import pytest

from hdiagram.clopen import INTEGERS, TWO_SIDED, BitwiseNot, IntegerSet, Shift
from hdiagram.construction import (
    ConstructionError,
    NotHRefinedError,
    Partition,
    PartitionSequence,
    build_diagram,
    canonical_sequence,
    h_refine_step,
    max_diameter,
    system_names,
    wedge,
)
from hdiagram.diagram import validate
from oracles import LEVEL_SIZES, ROUTES

cyl = TWO_SIDED.parse
P1 = Partition([cyl("[0]"), cyl("[1]")], 1)


def test_wedge_units():
    whole = Partition.trivial(TWO_SIDED)
    assert wedge([whole, P1]).blocks == P1.blocks
    assert wedge([P1, P1]).blocks == P1.blocks


def test_wedge_with_shifted_partition():
    w = wedge([P1, P1.image(Shift(), 1)])
    assert set(w.labels) == {"0[0]*", "0[1]*", "1[0]*", "1[1]*"}
    assert all(w.refines(p) for p in (P1, P1.image(Shift(), 1)))


def test_h_refine_step_examples():
    whole = Partition.trivial(TWO_SIDED)
    assert h_refine_step(whole, P1, Shift()).blocks == P1.blocks
    step = h_refine_step(P1, P1, Shift())
    assert len(step) == 8 and step.level == 2
    assert set(step.labels) == set(canonical_sequence("shift")[2].labels)
    for factor in (P1, P1.image(Shift(), 1), P1.image(Shift(), -1)):
        assert step.refines(factor)
    assert h_refine_step(P1, P1, BitwiseNot()).blocks == P1.blocks


def test_canonical_sequence_examples():
    assert canonical_sequence("shift")[2].labels == [
        "0[0]0", "0[0]1", "0[1]0", "0[1]1", "1[0]0", "1[0]1", "1[1]0", "1[1]1"
    ]
    for name in system_names():
        assert canonical_sequence(name)[0].labels == ["X"]
    assert canonical_sequence("zstar")[3].labels == ["{-2}", "{-1}", "{0}", "{1}", "{2}", "V(2)"]
    with pytest.raises(ConstructionError):
        canonical_sequence("baker")


@pytest.mark.parametrize("name", ["shift", "bitwise-not", "odometer", "zstar"])
def test_canonical_sequences_are_h_refined(name):
    seq = canonical_sequence(name)
    for n in range(5):
        assert seq[n].violations() == []
        assert seq.refinement_violations(n) == []
        assert len(seq[n]) == LEVEL_SIZES[name](n)


@pytest.mark.parametrize("name", ["shift", "bitwise-not", "odometer", "zstar"])
def test_parents_match_closed_form_routes(built, name):
    depth = {"shift": 6, "bitwise-not": 6, "odometer": 10, "zstar": 30}[name]
    d = built(name, depth)[1]
    for k in range(depth):
        blue, red = ROUTES[name](k)
        assert d.level(k).blue_parent.tolist() == blue, f"blue at pair {k}"
        assert d.level(k).red_parent.tolist() == red, f"red at pair {k}"


def test_zstar_level_one_routing(built):
    d = built("zstar", 5)[1]
    labels = d.labels
    blue = {labels[2][w]: labels[1][p] for w, p in enumerate(d.level(1).blue_parent)}
    red = {labels[2][w]: labels[1][p] for w, p in enumerate(d.level(1).red_parent)}
    assert blue == {"{-1}": "V(0)", "{0}": "{0}", "{1}": "V(0)", "V(1)": "V(0)"}
    assert red == {"{-1}": "{0}", "{0}": "V(0)", "{1}": "V(0)", "V(1)": "V(0)"}


def test_not_red_parent_flips_centre(built):
    d = built("bitwise-not", 3)[1]
    for w, label in enumerate(d.labels[2]):
        centre = label[label.index("[") + 1]
        flipped = "1" if centre == "0" else "0"
        assert d.labels[1][d.level(1).red_parent[w]] == f"[{flipped}]"


EXPECTED_DIAMETER = {
    "shift": lambda n: Fraction(1, 2**n),
    "odometer": lambda n: Fraction(1, 2**n),
    # the cofinite block V(n-1) is the widest
    "zstar": lambda n: Fraction(2 * n, (n + 1) ** 2) if n else Fraction(1),
}


@pytest.mark.parametrize("name", ["shift", "odometer", "zstar"])
def test_diameters_shrink(name):
    seq = canonical_sequence(name)
    diam = [max_diameter(seq[n]) for n in range(10)]
    assert diam == [EXPECTED_DIAMETER[name](n) for n in range(10)]
    assert all(a > b for a, b in zip(diam, diam[1:]))


def test_user_sequence_from_bases():
    seq = PartitionSequence.h_refined(Shift(), [P1])
    assert [len(seq[n]) for n in range(4)] == [1, 2, 8, 32]
    assert seq[3].blocks == canonical_sequence("shift")[3].blocks
    assert validate(build_diagram(seq, 3)) == []


def test_sequence_that_is_not_h_refined():
    bad = PartitionSequence(Shift(), lambda n: [TWO_SIDED.whole()] if n == 0 else P1.blocks)
    with pytest.raises(NotHRefinedError, match="not h-refined at level 1"):
        build_diagram(bad, 2)


def test_sequence_that_is_not_a_partition():
    def gen(n):
        if n == 0:
            return [INTEGERS.whole()]
        return [IntegerSet.finite([0]), IntegerSet.v(1)]

    with pytest.raises(ConstructionError, match="not a partition"):
        build_diagram(PartitionSequence(canonical_sequence("zstar").h, gen), 1)


def test_depth_must_be_positive():
    with pytest.raises(ConstructionError):
        build_diagram(canonical_sequence("shift"), 0)


def test_partition_locate():
    seq = canonical_sequence("shift")
    assert seq[1].locate(cyl("0[1]1")) == 1
    assert seq[1].locate(TWO_SIDED.whole()) is None
    assert seq[2].blocks_within(cyl("[1]")) == [2, 3, 6, 7]
