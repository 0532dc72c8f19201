"""Acceptance suite: one recorded PASS/FAIL line per criterion.

Values taken from the printed tables live in ``reference_tables``.  Where the
exact computation refutes a printed statement, the literal expectation is kept
as a strict xfail next to a passing test of the corrected value.
"""

from __future__ import annotations

import random

import pytest

from nicepar.classify import EXCEPTIONAL_NICE, ODD_READINGS, count_even_orbits, even_orbit_compositions, genfun_coefficients, is_nice, nice_C, nice_D
from nicepar.cli import check_richardson, run_sweep
from nicepar.combinatorics import Partition
from nicepar.jordan import dimension_route, jordan_form, rank_sequence
from nicepar.oracle import MatrixModel, centralizer_dim_oracle, injectivity_check, is_nice_oracle, matrix_power_ranks, surjectivity_check
from nicepar.oracle.bridge import to_chevalley
from nicepar.oracle.niceness import dimension_obstruction, graded_algebra
from nicepar.oracle.roots import EXCEPTIONAL_RANKS, MIN_RANK, iter_colorings
from nicepar.parabolic import BlockSequence, ParabolicSpec, blocks_to_coloring, coloring_to_blocks
from nicepar.richardson import NotNiceError, build_matrix
from reference_tables import (
    COLORING_COUNTS,
    DIMENSION_SURVIVORS,
    PRINTED_E6,
    PRINTED_E7,
    PRINTED_E8,
    PRINTED_F4,
    PRINTED_G2,
    STATED_COUNTS,
    as_tuples,
)

PRINTED = {"G2": PRINTED_G2, "F4": PRINTED_F4, "E6": PRINTED_E6, "E7": PRINTED_E7, "E8": PRINTED_E8}
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


@pytest.fixture(scope="module")
def exceptional_sweep():
    """Oracle verdict for every coloring of every exceptional algebra."""
    out = {}
    for name in EXCEPTIONAL:
        rank = EXCEPTIONAL_RANKS[name]
        verdicts = {c: is_nice_oracle(ParabolicSpec(name, rank, c)) for c in iter_colorings(rank)}
        out[name] = verdicts
    return out


@pytest.fixture(scope="module")
def classical_sweeps():
    return {t: run_sweep(t, 7) for t in "ABCD"}


# -- criterion 1 -------------------------------------------------------------


def test_criterion_1_exceptional_tables(exceptional_sweep, record_criterion):
    oracle = {k: {c for c, v in sweep.items() if v.nice} for k, sweep in exceptional_sweep.items()}
    # the embedded tables are exactly what the oracle derives
    assert oracle == {k: set(v) for k, v in EXCEPTIONAL_NICE.items()}
    assert {k: len(v) for k, v in exceptional_sweep.items()} == COLORING_COUNTS
    # printed E tables are reproduced entry for entry
    for name in ("E6", "E7", "E8"):
        assert oracle[name] == as_tuples(PRINTED[name]), name
    # the G2 column lists the long root first; in Bourbaki order (1,0) becomes (0,1)
    assert {c[::-1] for c in as_tuples(PRINTED_G2)} == oracle["G2"]
    assert (1, 0) not in oracle["G2"]
    # one printed F4 entry disagrees: (1,0,0,1) is not nice, (1,0,0,0) is
    assert as_tuples(PRINTED_F4) ^ oracle["F4"] == {(1, 0, 0, 1), (1, 0, 0, 0)}
    assert not exceptional_sweep["F4"][(1, 0, 0, 1)].nice
    survivors = {
        k: sum(1 for c in iter_colorings(EXCEPTIONAL_RANKS[k]) if dimension_obstruction(graded_algebra(k, EXCEPTIONAL_RANKS[k], c)) is None)
        for k in DIMENSION_SURVIVORS
    }
    assert survivors == DIMENSION_SURVIVORS
    counts = {k: len(v) for k, v in oracle.items()}
    literal_ok = counts == STATED_COUNTS and all(oracle[k] == as_tuples(PRINTED[k]) for k in EXCEPTIONAL)
    mismatched = [k for k in EXCEPTIONAL if counts[k] != STATED_COUNTS[k]]
    record_criterion(
        1,
        literal_ok,
        f"oracle counts {counts}; stated count differs for {mismatched or 'none'} "
        "(E8: 28 found, all 28 printed entries reproduced); printed G2 uses long-root-first order; "
        "printed F4 (1,0,0,1) should read (1,0,0,0)",
    )


@pytest.mark.xfail(strict=True, reason="the oracle finds 28 nice parabolics in E8, not 29")
def test_criterion_1_literal_counts(exceptional_sweep):
    counts = {k: sum(v.nice for v in sweep.values()) for k, sweep in exceptional_sweep.items()}
    assert counts == STATED_COUNTS


@pytest.mark.xfail(strict=True, reason="printed G2 and F4 columns differ from the Bourbaki-order oracle")
def test_criterion_1_literal_G2_F4_entries(exceptional_sweep):
    for name in ("G2", "F4"):
        assert {c for c, v in exceptional_sweep[name].items() if v.nice} == as_tuples(PRINTED[name])


# -- criterion 2 -------------------------------------------------------------


def test_criterion_2_three_way_agreement(classical_sweeps, record_criterion):
    total = sum(len(s.rows) for s in classical_sweeps.values())
    disagreements = sum(s.disagreements for s in classical_sweeps.values())
    indeterminate = sum(s.indeterminate for s in classical_sweeps.values())
    assert not any(s.truncated for s in classical_sweeps.values())
    expected = sum(2**n for t in "ABCD" for n in range(MIN_RANK[t], 8))
    assert total == expected
    record_criterion(2, disagreements == 0 and indeterminate == 0, f"{total} colorings, {disagreements} disagreements, {indeterminate} indeterminate")
    assert disagreements == 0
    assert indeterminate == 0


# -- criterion 3 -------------------------------------------------------------

GOLDEN = [
    ("C", (3, 4, 3), (3, 3, 2, 2), 19),
    ("C", (2, 4, 4, 2), (4, 4, 2, 2), 20),
    ("B", (3, 5, 3), (3, 3, 3, 1, 1), 19),
    ("D", (2, 3, 3, 2), (4, 4, 1, 1), 13),
    ("D", (1, 3, 5, 4, 5, 3, 1), None, 41),
]


def test_criterion_3_golden_examples(record_criterion):
    failures = []
    for lie_type, blocks, partition, dim in GOLDEN:
        seq = BlockSequence(lie_type, blocks)
        route = dimension_route(seq)
        x = build_matrix(seq).to_exact()
        measured = MatrixModel(lie_type, blocks).centralizer_dim(x)
        spec = blocks_to_coloring(seq)
        via_roots = centralizer_dim_oracle(to_chevalley(x, spec.lie_type, spec.rank), spec)
        if partition is not None and route.jordan.partition.parts != partition:
            failures.append((blocks, "partition", route.jordan.partition.parts))
        if not (route.levi == route.centralizer == measured == via_roots == dim):
            failures.append((blocks, "dims", route.levi, route.centralizer, measured, via_roots))
    assert jordan_form(BlockSequence("C", (3, 4, 3))).partition.dual() == Partition.from_parts((4, 4, 2))
    record_criterion(3, not failures, f"{len(GOLDEN)} worked examples reproduced" if not failures else f"failures {failures}")
    assert not failures


# -- criterion 4 -------------------------------------------------------------


def test_criterion_4_richardson_validity(record_criterion):
    checked, failures = 0, []
    for lie_type in "ABCD":
        for rank in range(MIN_RANK[lie_type], 8):
            for coloring in iter_colorings(rank):
                spec = ParabolicSpec(lie_type, rank, coloring)
                if not is_nice(spec):
                    continue
                checked += 1
                result = check_richardson(spec)
                if not result["ok"]:
                    failures.append((str(spec), result))
    record_criterion(4, not failures and checked > 0, f"{checked} nice classical parabolics of rank <= 7, {len(failures)} failures")
    assert not failures


def test_criterion_4_example_labels():
    # B5 (4,3,4) has an explicit X_R whose power ranks follow the closed form;
    # (5,3,5) would need B6 and is not nice there
    seq = BlockSequence("B", (4, 3, 4))
    assert matrix_power_ranks(build_matrix(seq).to_exact()) == rank_sequence(seq)[1:]
    with pytest.raises(NotNiceError):
        build_matrix(BlockSequence("B", (5, 3, 5)))


# -- criterion 5 -------------------------------------------------------------


def test_criterion_5_generating_function(record_criterion):
    left, right = genfun_coefficients(40)
    counts = [even_orbit_compositions("sl", n).count for n in range(1, 26)]
    ok = left == right and left[:25] == counts
    assert count_even_orbits("A", 1).count == left[1]
    record_criterion(5, ok, f"sides agree to degree 40: {left == right}; sl_n counts n <= 25 match: {left[:25] == counts}")
    assert ok


# -- criterion 6 -------------------------------------------------------------


def _sample_specs(rng):
    types = [("A", r) for r in range(1, 6)] + [("B", r) for r in range(2, 6)] + [("C", r) for r in range(3, 6)]
    types += [("D", 4), ("D", 5), ("G2", 2), ("F4", 4)]
    while True:
        lie_type, rank = rng.choice(types)
        coloring = tuple(rng.randint(0, 1) for _ in range(rank))
        graded = graded_algebra(lie_type, rank, coloring)
        if graded.dim(1):
            yield ParabolicSpec(lie_type, rank, coloring), graded


def test_criterion_6_surjective_iff_injective(record_criterion):
    rng = random.Random(6)
    pairs = {"generic": 0, "sparse": 0, "single-root": 0, "zero": 0}
    agree = outcomes_true = 0
    specs = _sample_specs(rng)
    for k in range(240):
        spec, graded = next(specs)
        roots = graded.degree_one_roots
        kind = ("generic", "sparse", "single-root", "zero")[k % 4]
        if kind == "generic":
            coeffs = {r: rng.choice([-3, -2, -1, 1, 2, 3]) for r in roots}
        elif kind == "sparse":
            coeffs = {r: rng.choice([0, 0, 1, -1, 2]) for r in roots}
        elif kind == "single-root":
            coeffs = {rng.choice(roots): 1}
        else:
            coeffs = {}
        x = graded.element(coeffs)
        s, i = surjectivity_check(x, spec), injectivity_check(x, spec)
        pairs[kind] += 1
        agree += s == i
        outcomes_true += s
    total = sum(pairs.values())
    ok = agree == total and total >= 200 and 0 < outcomes_true < total
    record_criterion(6, ok, f"{agree}/{total} pairs agree ({pairs}); {outcomes_true} surjective")
    assert ok


# -- criterion 7 -------------------------------------------------------------


def _reading_disagreements(sweep, predicate, **kwargs):
    bad = 0
    for row in sweep.rows:
        spec = ParabolicSpec(sweep.lie_type, row["rank"], tuple(int(c) for c in row["spec"].split(":")[1].split(",")))
        if predicate(coloring_to_blocks(spec), **kwargs).nice != row["oracle"]:
            bad += 1
    return bad


def test_criterion_7_open_questions(classical_sweeps, record_criterion):
    readings = {}
    for reading in ODD_READINGS:
        readings[f"C/{reading}"] = _reading_disagreements(classical_sweeps["C"], nice_C, odd_reading=reading)
        for floor in (True, False):
            readings[f"D/{reading}/floor={floor}"] = _reading_disagreements(classical_sweeps["D"], nice_D, odd_reading=reading, peak_floor=floor)
    # the B label: block data (2,5,2) of B4 cannot produce the quoted numbers, (3,5,3) of B5 does
    b4 = dimension_route(coloring_to_blocks(ParabolicSpec("B", 4, (0, 1, 0, 0))))
    b5 = dimension_route(BlockSequence("B", (3, 5, 3)))
    quoted = ((3, 3, 3, 1, 1), (5, 3, 3), 19)
    label_b5 = (b5.jordan.partition.parts, b5.jordan.partition.dual().parts, b5.centralizer) == quoted
    label_b4 = (b4.jordan.partition.parts, b4.jordan.partition.dual().parts, b4.centralizer) == quoted
    oracle_b5 = is_nice_oracle(blocks_to_coloring(BlockSequence("B", (3, 5, 3))))
    ok = all(v == 0 for v in readings.values()) and label_b5 and not label_b4 and oracle_b5.centralizer_dim == 19
    record_criterion(7, ok, f"reading disagreements {readings}; worked B example is B5 (3,5,3): {label_b5}")
    assert ok


def test_resolved_readings_regression():
    # both readings are equivalent on every admissible sequence, so the default stays "exactly"
    assert nice_C((3, 4, 3)).nice and nice_D((2, 3, 3, 2)).nice
    assert not nice_C((1, 1, 2, 1, 1)).nice
    assert coloring_to_blocks(ParabolicSpec("B", 4, (0, 1, 0, 0))).blocks == (2, 5, 2)
    assert dimension_route(BlockSequence("B", (3, 5, 3))).jordan.partition.parts == (3, 3, 3, 1, 1)


@pytest.mark.slow
def test_type_D_agreement_beyond_rank_7():
    result = run_sweep("D", 9, min_rank=8)
    assert len(result.rows) == 2**8 + 2**9
    assert result.disagreements == 0 and result.indeterminate == 0
