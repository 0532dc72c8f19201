from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nicepar.classify import is_nice
from nicepar.combinatorics import Partition, unimodal_palindromic_compositions
from nicepar.jordan import (
    InvalidPartition,
    centralizer_dim,
    dimension_route,
    generic_ranks_A,
    generic_ranks_BD,
    generic_ranks_C,
    jordan_form,
    nice_via_dimension,
    rank_sequence,
)
from nicepar.oracle import MatrixModel, matrix_power_ranks
from nicepar.oracle.roots import MIN_RANK, iter_colorings
from nicepar.parabolic import BlockSequence, ParabolicSpec, coloring_to_blocks


def test_type_A_window_sums():
    assert [generic_ranks_A((2, 1, 2), j) for j in (1, 2, 3)] == [2, 1, 0]
    assert generic_ranks_A((5,), 1) == 0
    assert generic_ranks_A((1, 2, 3, 1), 1) == 4
    with pytest.raises(ValueError):
        generic_ranks_A((1, 2), 0)


def test_symplectic_and_orthogonal_ranks():
    assert [generic_ranks_C((3, 4, 3), j) for j in (1, 2, 3)] == [6, 2, 0]
    for n in range(1, 7):
        assert generic_ranks_BD((n, n), 1, is_B=False) == (n - 1 if n % 2 else n)


@pytest.mark.parametrize(
    "lie_type, blocks, partition, kernel",
    [
        ("C", (3, 4, 3), (3, 3, 2, 2), (4, 8, 10)),
        ("C", (2, 4, 4, 2), (4, 4, 2, 2), (4, 8, 10, 12)),
        ("B", (3, 5, 3), (3, 3, 3, 1, 1), (5, 8, 11)),
        ("D", (2, 3, 3, 2), (4, 4, 1, 1), (4, 6, 8, 10)),
        ("A", (2, 1, 2), (3, 1, 1), (3, 4, 5)),
    ],
)
def test_jordan_forms(lie_type, blocks, partition, kernel):
    form = jordan_form(BlockSequence(lie_type, blocks))
    assert form.partition.parts == partition
    assert form.kernel_dims == kernel
    assert form.size == sum(blocks)


def test_single_block_is_zero():
    assert rank_sequence(BlockSequence("C", (6,))) == [6, 0]
    assert jordan_form(BlockSequence("C", (6,))).partition.parts == (1,) * 6


@pytest.mark.parametrize(
    "partition, lie_type, dim",
    [((3, 3, 2, 2), "C", 19), ((3, 3, 3, 1, 1), "B", 19), ((4, 4, 1, 1), "D", 13), ((4, 4, 2, 2), "C", 20), ((3, 1, 1), "A", 11)],
)
def test_centralizer_dims(partition, lie_type, dim):
    assert centralizer_dim(partition, lie_type) == dim


@pytest.mark.parametrize("partition, lie_type", [((3, 2), "C"), ((2, 1), "B"), ((3, 3, 2), "D"), ((2, 2), "B")])
def test_parity_violations(partition, lie_type):
    with pytest.raises(InvalidPartition):
        centralizer_dim(partition, lie_type)


@pytest.mark.parametrize(
    "lie_type, blocks, nice, excess",
    [("C", (3, 4, 3), True, 0), ("A", (2, 1, 2), False, 2), ("D", (3, 3, 3, 3), False, 2), ("D", (1, 3, 5, 4, 5, 3, 1), True, 0)],
)
def test_dimension_route(lie_type, blocks, nice, excess):
    route = dimension_route(BlockSequence(lie_type, blocks))
    assert route.nice is nice
    assert route.excess == excess


def test_D11_levi():
    assert dimension_route(BlockSequence("D", (1, 3, 5, 4, 5, 3, 1))).levi == 41


@pytest.mark.parametrize("lie_type", "ABCD")
def test_dimension_route_matches_predicates(lie_type):
    for rank in range(MIN_RANK[lie_type], 10):
        for coloring in iter_colorings(rank):
            spec = ParabolicSpec(lie_type, rank, coloring)
            assert nice_via_dimension(coloring_to_blocks(spec)) == is_nice(spec).nice, spec


def test_even_orbit_partitions_are_even():
    # palindromic unimodal block data give the even orbits of sl_n
    for n in range(1, 12):
        for blocks in unimodal_palindromic_compositions(n):
            parts = jordan_form(BlockSequence("A", blocks)).partition.parts
            assert len({p % 2 for p in parts}) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from("ABCD"), st.integers(min_value=4, max_value=7), st.data())
def test_closed_form_ranks_match_generic_matrix(lie_type, rank, data):
    coloring = tuple(data.draw(st.lists(st.integers(0, 1), min_size=rank, max_size=rank)))
    blocks = coloring_to_blocks(ParabolicSpec(lie_type, rank, coloring))
    model = MatrixModel(blocks.lie_type, blocks.blocks)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    expected = rank_sequence(blocks)[1:]
    seen = []
    for _ in range(3):
        ranks = matrix_power_ranks(model.generic_element(rng))
        # closed-form ranks are maxima: never exceeded, attained by generic samples
        assert all(r <= e for r, e in zip(ranks, expected))
        seen.append(ranks)
    assert expected in seen


def test_partition_dual_of_kernel_jumps():
    form = jordan_form(BlockSequence("B", (3, 5, 3)))
    jumps = [b - a for a, b in zip((0,) + form.kernel_dims, form.kernel_dims)]
    assert Partition.from_parts(jumps) == form.partition.dual()
