"""Explicit Richardson elements X_R in g_1 for nice parabolics of the classical types.

Positions inside the rectangle R_{i,i+1} (rows of block i, columns of block
i+1) are given as (k, l) with (1, 1) in the lower-left corner: k counts
columns from the left, l counts rows from the bottom.  All other indices in
this module are 1-based matrix positions.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .classify import nice_blocks
from .oracle.exact import ExactMatrix
from .oracle.matrix_model import MatrixModel, in_algebra
from .parabolic import BlockSequence

__all__ = [
    "NotNiceError",
    "RichardsonMatrix",
    "build_matrix",
    "choose_S1",
    "choose_S1_A",
    "choose_S1_BD",
    "choose_S1_C",
    "rectangle_position",
]

Choice = dict[int, list[tuple[int, int]]]  # rectangle index i -> [(k, l), ...]


class NotNiceError(ValueError):
    """The recipes only apply to nice parabolics."""


def _require_nice(blocks: BlockSequence) -> None:
    verdict = nice_blocks(blocks)
    if not verdict.nice:
        raise NotNiceError(f"{blocks} is not nice ({verdict.rule}); no Richardson element in g_1")


def _starts(blocks: tuple[int, ...]) -> list[int]:
    out, pos = [], 1
    for b in blocks:
        out.append(pos)
        pos += b
    return out


def rectangle_position(blocks: BlockSequence | tuple[int, ...], i: int, k: int, l: int) -> tuple[int, int]:
    """Matrix position of entry (k, l) of R_{i,i+1}."""
    seq = tuple(blocks.blocks if isinstance(blocks, BlockSequence) else blocks)
    a_i, a_next = seq[i - 1], seq[i]
    if not (1 <= k <= a_next and 1 <= l <= a_i):
        raise ValueError(f"({k},{l}) is outside the {a_next}x{a_i} rectangle R_{i},{i + 1}")
    starts = _starts(seq)
    last_row = starts[i - 1] + a_i - 1
    return last_row - (l - 1), starts[i] + (k - 1)


def _recipe_a(i: int, a_i: int, a_next: int) -> list[tuple[int, int]]:
    s = min(a_i, a_next)
    if i % 2:
        return [(t, t) for t in range(1, s + 1)]
    return [(a_next - t, a_i - t) for t in range(s)]


def _dedup(entries: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return list(dict.fromkeys(entries))


def choose_S1_A(blocks: BlockSequence) -> Choice:
    if blocks.lie_type != "A":
        raise ValueError("type A recipe needs a type A block sequence")
    _require_nice(blocks)
    seq = blocks.blocks
    return {i: _recipe_a(i, seq[i - 1], seq[i]) for i in range(1, len(seq))}


def _split_corners(i: int, a_i: int, a_next: int, *, orthogonal: bool) -> list[tuple[int, int]]:
    """Entries from the (1,1) corner and from the (a_{i+1}, a_i) corner."""
    big, small = (a_i + 1) // 2, a_i // 2
    if orthogonal:
        low = big
        high = big if (a_i - a_next) % 2 else small + 1
    elif i % 2:
        low, high = big, small
    else:
        low, high = small, small + 1
    low = min(low, a_i, a_next)
    picks = [(t, t) for t in range(1, low + 1)]
    picks += [(a_next - t, a_i - t) for t in range(high) if a_next - t >= 1 and a_i - t >= 1]
    return _dedup(picks)


def choose_S1_C(blocks: BlockSequence) -> Choice:
    if blocks.lie_type != "C":
        raise ValueError("type C recipe needs a type C block sequence")
    _require_nice(blocks)
    seq = blocks.blocks
    r = len(seq) // 2
    if len(seq) % 2 == 0:
        return {i: _recipe_a(i, seq[i - 1], seq[i]) for i in range(1, r + 1)}
    return {i: _split_corners(i, seq[i - 1], seq[i], orthogonal=False) for i in range(1, r + 1)}


def choose_S1_BD(blocks: BlockSequence) -> Choice:
    if blocks.lie_type not in ("B", "D"):
        raise ValueError("orthogonal recipe needs a type B or D block sequence")
    _require_nice(blocks)
    seq = blocks.blocks
    r = len(seq) // 2
    if len(seq) % 2 == 1:
        return {i: _split_corners(i, seq[i - 1], seq[i], orthogonal=True) for i in range(1, r + 1)}
    chosen = {i: _recipe_a(i, seq[i - 1], seq[i]) for i in range(1, r)}
    # Central square: 2x2 pieces (+1 at (t, t+1), its partner -1 at (t+1, t) comes from completion).
    a_r = seq[r - 1]
    if r % 2:
        ts = range(1, a_r, 2)
    else:
        ts = range(a_r - 1, 0, -2)
    chosen[r] = [(t, t + 1) for t in ts][: a_r // 2]
    return chosen


def choose_S1(blocks: BlockSequence) -> Choice:
    if blocks.lie_type == "A":
        return choose_S1_A(blocks)
    if blocks.lie_type == "C":
        return choose_S1_C(blocks)
    return choose_S1_BD(blocks)


@dataclass(frozen=True)
class RichardsonMatrix:
    lie_type: str
    blocks: tuple[int, ...]
    size: int
    entries: dict[tuple[int, int], int]
    support_roots: tuple[tuple[int, int], ...] = field(default=())

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix.from_entries(self.size, self.size, {(i - 1, j - 1): v for (i, j), v in self.entries.items()})

    def root_labels(self) -> list[str]:
        return [f"a{i},{j}" for i, j in self.support_roots]

    def simple_root_expansion(self, i: int, j: int) -> tuple[int, ...]:
        """Type A only: E_ij is the root alpha_i + ... + alpha_{j-1}."""
        if self.lie_type != "A":
            raise ValueError("simple-root expansion is only defined for type A here")
        return tuple(range(i, j))

    def is_in_algebra(self) -> bool:
        return in_algebra(self.to_exact(), self.lie_type)

    def has_degree_one_support(self) -> bool:
        model = MatrixModel(self.lie_type, self.blocks)
        return all(model.degree(i - 1, j - 1) == 1 for (i, j) in self.entries)

    def to_text(self) -> str:
        width = max((len(str(v)) for v in self.entries.values()), default=1)
        lines = []
        for i in range(1, self.size + 1):
            cells = [str(self.entries.get((i, j), 0)).rjust(width) for j in range(1, self.size + 1)]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row", "col", "value"])
        for (i, j), v in sorted(self.entries.items()):
            writer.writerow([i, j, v])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "type": self.lie_type,
            "blocks": list(self.blocks),
            "size": self.size,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "support_roots": [list(p) for p in self.support_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_matrix(blocks: BlockSequence) -> RichardsonMatrix:
    """X_R: ones at the chosen positions, completed by membership for B/C/D."""
    chosen = choose_S1(blocks)
    seq = blocks.blocks
    model = MatrixModel(blocks.lie_type, seq)
    entries: dict[tuple[int, int], int] = {}
    support: list[tuple[int, int]] = []

    def place(pos: tuple[int, int], value: int) -> None:
        old = entries.get(pos)
        if old is not None and old != value:
            raise ValueError(f"{blocks}: conflicting values {old} and {value} at {pos}")
        entries[pos] = value

    for i, picks in sorted(chosen.items()):
        for k, l in picks:
            pos = rectangle_position(seq, i, k, l)
            if pos in entries:
                continue
            support.append(pos)
            place(pos, 1)
            if blocks.lie_type != "A":
                ai, aj, v = model.adjoint(pos[0] - 1, pos[1] - 1, 1)
                if (ai + 1, aj + 1) == pos:
                    if v != 1:
                        raise ValueError(f"{blocks}: position {pos} cannot carry a nonzero entry")
                    continue
                place((ai + 1, aj + 1), v)
    return RichardsonMatrix(blocks.lie_type, seq, blocks.total, entries, tuple(support))
