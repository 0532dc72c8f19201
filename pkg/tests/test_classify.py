from __future__ import annotations

import itertools

import pytest

from nicepar.classify import (
    EXCEPTIONAL_NICE,
    count_even_orbits,
    dip_shape,
    even_A,
    even_nilpotent_nice_A,
    even_orbit_compositions,
    genfun_coefficients,
    genfun_literal_right,
    is_nice,
    nice_A,
    nice_B,
    nice_C,
    nice_D,
    nice_exceptional,
)
from nicepar.oracle.roots import EXCEPTIONAL_RANKS, MIN_RANK, iter_colorings
from nicepar.parabolic import BlockSequence, InvalidSubdiagram, ParabolicSpec, graded_dims, parse_spec, restrict_to_subdiagram


@pytest.mark.parametrize(
    "predicate, blocks, nice",
    [
        (nice_A, (1, 2, 3, 1), True),
        (nice_A, (2, 1, 2), False),
        (nice_A, (7,), True),
        (nice_B, (3, 5, 3), True),
        (nice_B, (3, 1, 3), False),
        (nice_B, (4, 3, 4), True),
        (nice_C, (3, 4, 3), True),
        (nice_C, (2, 4, 4, 2), True),
        (nice_C, (1, 1, 2, 1, 1), False),
        (nice_D, (2, 3, 3, 2), True),
        (nice_D, (3, 3, 3, 3), False),
        (nice_D, (1, 3, 5, 4, 5, 3, 1), True),
    ],
)
def test_block_predicates(predicate, blocks, nice):
    assert predicate(blocks).nice is nice


def test_B_dip_clause_shape():
    # shape test only: the sequence has an even sum, so it is not a B block sequence
    verdict = nice_B((3, 2, 2, 2, 3))
    assert verdict.nice and verdict.rule == "B-dip-clause"
    with pytest.raises(ValueError):
        BlockSequence("B", (3, 2, 2, 2, 3))
    assert nice_B((3, 2, 3)).rule == "B-dip-clause"
    assert is_nice(parse_spec("B4#3,3,3")).nice


def test_dip_shape():
    d = dip_shape((2, 4, 3, 3, 3, 4, 2))
    assert (d.head, d.b, d.s, d.strict_peak) == ((2, 4), 3, 3, True)
    assert dip_shape((1, 2, 1)) is None


def test_D_requires_canonical_sequence():
    with pytest.raises(ValueError):
        nice_D((3, 1, 1, 3))
    assert is_nice(parse_spec("D4#3,1,1,3")).nice == nice_D((3, 2, 3)).nice


@pytest.mark.parametrize(
    "text, nice",
    [("G2:0,1", True), ("G2:1,0", False), ("F4:1,0,0,1", False), ("F4:1,0,0,0", True), ("E7:1,1,0,0,1,0,1", True), ("E8:0,1,0,0,0,0,0,1", True)],
)
def test_exceptional_lookup(text, nice):
    assert nice_exceptional(parse_spec(text)).nice is nice


def test_exceptional_table_sizes():
    assert {k: len(v) for k, v in EXCEPTIONAL_NICE.items()} == {"G2": 3, "F4": 8, "E6": 30, "E7": 29, "E8": 28}


@pytest.mark.parametrize("lie_type", list("ABCD") + sorted(EXCEPTIONAL_RANKS))
def test_zero_coloring_is_nice(lie_type):
    rank = EXCEPTIONAL_RANKS.get(lie_type, 5)
    assert is_nice(ParabolicSpec(lie_type, rank, (0,) * rank)).nice


@pytest.mark.parametrize("l, m", [(1, 2), (1, 4), (3, 4), (3, 6), (5, 6)])
def test_C_family_nice_only_for_small_r(l, m):
    for r in range(4):
        blocks = (l,) * r + (m,) + (l,) * r
        assert nice_C(blocks).nice is (r <= 1)


def _connected_subsets(rank):
    for size in range(1, rank + 1):
        for nodes in itertools.combinations(range(1, rank + 1), size):
            yield nodes


@pytest.mark.parametrize("lie_type", "ABCD")
def test_nice_restricts_to_nice_subdiagrams(lie_type):
    for rank in range(MIN_RANK[lie_type], 6):
        for coloring in iter_colorings(rank):
            spec = ParabolicSpec(lie_type, rank, coloring)
            if not is_nice(spec):
                continue
            for nodes in _connected_subsets(rank):
                try:
                    sub = restrict_to_subdiagram(spec, nodes)
                except InvalidSubdiagram:
                    continue
                assert is_nice(sub).nice, (spec, nodes, sub)


@pytest.mark.parametrize("lie_type", "ABCD")
def test_nice_implies_dimension_bound(lie_type):
    for rank in range(MIN_RANK[lie_type], 7):
        for coloring in iter_colorings(rank):
            spec = ParabolicSpec(lie_type, rank, coloring)
            if not is_nice(spec):
                continue
            dims = graded_dims(spec)
            if dims[1]:
                assert dims[1] > dims[2]
            assert all(dims[j] >= dims[j + 1] for j in range(2, dims.top + 1))


def test_even_A():
    assert even_A((3, 3, 1))
    assert not even_A((2, 1))
    assert even_A((4, 4, 2, 2))


def test_even_nilpotent_nice_A():
    assert even_nilpotent_nice_A((1, 2, 1))
    assert not even_nilpotent_nice_A((1, 2, 3, 1))
    assert even_nilpotent_nice_A((3, 4, 3))
    with pytest.raises(ValueError):
        even_nilpotent_nice_A((2, 1, 2))


def test_even_orbit_counts():
    sl2 = count_even_orbits("A", 1)
    assert sl2.count == 2 and {c.parts for c in sl2.compositions} == {(2,), (1, 1)}
    sp4 = even_orbit_compositions("sp", 4)
    assert {c.parts for c in sp4.compositions} == {(4,), (2, 2), (1, 1, 1, 1)}
    so3 = even_orbit_compositions("so", 3)
    assert {c.parts for c in so3.compositions} == {(3,), (1, 1, 1)}


def test_generating_function():
    left, right = genfun_coefficients(40)
    assert left == right
    assert left[0] == 1 and left[1] == 2 == count_even_orbits("A", 1).count
    for n in range(1, 26):
        assert left[n - 1] == even_orbit_compositions("sl", n).count


def test_literal_right_side_differs():
    # the product over odd parts has to include the factor 1/(1-q)
    _, right = genfun_coefficients(6)
    assert genfun_literal_right(6) == [0, 1, 1, 2, 1, 4]
    assert right == [1, 2, 2, 4, 3, 7]
