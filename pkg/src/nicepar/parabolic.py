"""Parabolic subalgebras as 0/1 colorings or block sequences.

A coloring ``u`` marks the crossed simple roots: ``u[i] == 1`` means the root
spaces of alpha_{i+1} lie outside the Levi factor.  The grading element H is
fixed by alpha_i(H) = u_i.  For the classical types the Levi factor of the
standard parabolic is a chain of diagonal blocks in the gl_N realization; the
block sizes are read off by grouping the equal diagonal values of H.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby, permutations
from typing import Iterable, Sequence

from .combinatorics import is_palindromic
from .oracle.roots import (
    CLASSICAL,
    EXCEPTIONAL_RANKS,
    MIN_RANK,
    _edges,
    algebra_dimension,
    build_root_system,
    gram_matrix,
    parse_type,
    type_label,
    validate_type,
)

__all__ = [
    "BlockSequence",
    "GradedDims",
    "ParabolicSpec",
    "SpecParseError",
    "UnsupportedOperation",
    "InvalidSubdiagram",
    "ambient_size",
    "blocks_to_coloring",
    "canonical_coloring",
    "canonicalize_D",
    "coloring_to_blocks",
    "format_spec",
    "graded_dims",
    "levi_dim",
    "parse_spec",
    "restrict_to_subdiagram",
]


class UnsupportedOperation(ValueError):
    """The operation has no meaning for the requested Lie type."""


class InvalidSubdiagram(ValueError):
    """A node set that is empty, disconnected, or outside the diagram."""


class SpecParseError(ValueError):
    """Malformed spec string; ``position`` is the offset of the bad token."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def ambient_size(lie_type: str, rank: int) -> int:
    """N for the natural gl_N realization of a classical algebra."""
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[lie_type]


@dataclass(frozen=True)
class ParabolicSpec:
    lie_type: str
    rank: int
    coloring: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coloring", tuple(int(u) for u in self.coloring))
        validate_type(self.lie_type, self.rank)
        if len(self.coloring) != self.rank:
            raise ValueError(f"coloring has {len(self.coloring)} entries, rank is {self.rank}")
        if any(u not in (0, 1) for u in self.coloring):
            raise ValueError(f"coloring entries must be 0 or 1: {self.coloring}")

    @property
    def is_classical(self) -> bool:
        return self.lie_type in CLASSICAL

    @property
    def label(self) -> str:
        return type_label(self.lie_type, self.rank)

    @property
    def dimension(self) -> int:
        return algebra_dimension(self.lie_type, self.rank)

    def __str__(self) -> str:
        return f"{self.label}:{','.join(map(str, self.coloring))}"


@dataclass(frozen=True)
class BlockSequence:
    """Diagonal block sizes of a standard Levi factor in gl_N.

    Type D sequences are canonicalized on construction, so a central pair
    ``1,1`` never survives.
    """

    lie_type: str
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(int(b) for b in self.blocks)
        if self.lie_type not in CLASSICAL:
            raise UnsupportedOperation(f"block sequences exist only for classical types, not {self.lie_type}")
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError(f"blocks must be a nonempty list of positive integers: {blocks}")
        total = sum(blocks)
        if self.lie_type != "A":
            if not is_palindromic(blocks):
                raise ValueError(f"type {self.lie_type} blocks must be palindromic: {blocks}")
            want_odd = self.lie_type == "B"
            if (total % 2 == 1) != want_odd:
                raise ValueError(f"type {self.lie_type} blocks must have {'odd' if want_odd else 'even'} sum: {blocks}")
        if self.lie_type == "D":
            blocks = canonicalize_D(blocks)
        object.__setattr__(self, "blocks", blocks)

    @property
    def total(self) -> int:
        return sum(self.blocks)

    @property
    def rank(self) -> int:
        n = self.total
        return n - 1 if self.lie_type == "A" else n // 2

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def half(self) -> tuple[int, ...]:
        """a_1, ..., a_r: the blocks strictly before the middle."""
        return self.blocks[: len(self.blocks) // 2]

    @property
    def middle(self) -> int | None:
        """The central block for an odd count, else None."""
        k = len(self.blocks)
        return self.blocks[k // 2] if k % 2 else None

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return f"{self.lie_type}{self.rank}#{','.join(map(str, self.blocks))}"


@dataclass(frozen=True)
class GradedDims:
    dims: dict[int, int]

    def __getitem__(self, j: int) -> int:
        return self.dims.get(j, 0)

    @property
    def top(self) -> int:
        return max(self.dims)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def is_symmetric(self) -> bool:
        return all(self[j] == self[-j] for j in self.dims)


def canonicalize_D(blocks: Sequence[int]) -> tuple[int, ...]:
    """Replace a central pair ``(..., a, 1, 1, a, ...)`` by ``(..., a, 2, a, ...)``."""
    blocks = tuple(blocks)
    k = len(blocks)
    if k % 2 == 0 and k >= 2 and blocks[k // 2 - 1] == 1 and blocks[k // 2] == 1:
        return blocks[: k // 2 - 1] + (2,) + blocks[k // 2 + 1 :]
    return blocks


def canonical_coloring(spec: ParabolicSpec) -> tuple[int, ...]:
    """Coloring with the D fork pair (1,0) rewritten as (0,1).

    The two fork nodes of D_n are swapped by a diagram automorphism, and both
    choices give the same block sequence.
    """
    u = spec.coloring
    if spec.lie_type == "D" and u[-2:] == (1, 0):
        return u[:-2] + (0, 1)
    return u


def _diagonal(lie_type: str, u: Sequence[int]) -> list[Fraction]:
    """Diagonal of H in gl_N, sorted decreasingly."""
    n = len(u)
    if lie_type == "A":
        h = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            h[i] = h[i + 1] + u[i]
        return h
    h = [Fraction(0)] * n
    if lie_type == "B":
        h[n - 1] = Fraction(u[n - 1])
    elif lie_type == "C":
        h[n - 1] = Fraction(u[n - 1], 2)
    else:
        h[n - 1] = Fraction(u[n - 1] - u[n - 2], 2)
        h[n - 2] = Fraction(u[n - 1] + u[n - 2], 2)
    last_chain = n - 2 if lie_type != "D" else n - 3
    for i in range(last_chain, -1, -1):
        h[i] = h[i + 1] + u[i]
    values = h + [-x for x in h] + ([Fraction(0)] if lie_type == "B" else [])
    return sorted(values, reverse=True)


def coloring_to_blocks(spec: ParabolicSpec) -> BlockSequence:
    if not spec.is_classical:
        raise UnsupportedOperation(f"{spec.label} has no block-sequence description")
    diag = _diagonal(spec.lie_type, spec.coloring)
    return BlockSequence(spec.lie_type, tuple(len(list(g)) for _, g in groupby(diag)))


def blocks_to_coloring(blocks: BlockSequence) -> ParabolicSpec:
    """Inverse of :func:`coloring_to_blocks`; for D it returns the canonical coloring."""
    t, seq, n = blocks.lie_type, blocks.blocks, blocks.rank
    k = len(seq)
    # Adjacent blocks differ by 1 in H; palindromes are centred on 0.
    top = Fraction(k - 1, 2)
    diag: list[Fraction] = []
    for i, size in enumerate(seq):
        diag.extend([top - i] * size)
    if t == "A":
        u = [int(diag[i] - diag[i + 1]) for i in range(n)]
    else:
        h = diag[:n]
        u = [int(h[i] - h[i + 1]) for i in range(n - 1)]
        if t == "B":
            u.append(int(h[n - 1]))
        elif t == "C":
            u.append(int(2 * h[n - 1]))
        else:
            u[n - 2] = int(h[n - 2] - h[n - 1])
            u.append(int(h[n - 2] + h[n - 1]))
    if any(x not in (0, 1) for x in u):
        raise ValueError(f"{blocks} is not the block sequence of a standard parabolic")
    return ParabolicSpec(t, n, tuple(u))


def levi_dim(blocks: BlockSequence) -> int:
    """dim m.  Type A counts the Levi inside gl_N, so it exceeds the sl value by 1."""
    t = blocks.lie_type
    if t == "A":
        return sum(a * a for a in blocks.blocks)
    base = sum(a * a for a in blocks.half)
    m = blocks.middle
    if m is None:
        return base
    return base + (m * (m + 1) // 2 if t == "C" else m * (m - 1) // 2)


def graded_dims(spec: ParabolicSpec) -> GradedDims:
    """dim g_j for every j, by counting roots of each degree."""
    system = build_root_system(spec.lie_type, spec.rank)
    dims: dict[int, int] = {0: spec.rank}
    for root in system.roots:
        d = sum(c * u for c, u in zip(root, spec.coloring))
        dims[d] = dims.get(d, 0) + 1
    return GradedDims(dict(sorted(dims.items())))


def _cartan(lie_type: str, rank: int) -> list[list[int]]:
    g = gram_matrix(lie_type, rank)
    return [[2 * g[i][j] // g[i][i] for j in range(rank)] for i in range(rank)]


def _candidate_types(k: int) -> list[tuple[str, int]]:
    out = [(t, k) for t in CLASSICAL if k >= MIN_RANK[t]]
    out += [(t, r) for t, r in EXCEPTIONAL_RANKS.items() if r == k]
    return out


def _match(sub: list[list[int]], target: list[list[int]]) -> tuple[int, ...] | None:
    """A permutation p with target[i][j] == sub[p[i]][p[j]], found by backtracking."""
    k = len(sub)

    def extend(prefix: list[int]) -> list[int] | None:
        i = len(prefix)
        if i == k:
            return prefix
        for cand in range(k):
            if cand in prefix:
                continue
            if all(target[i][j] == sub[cand][prefix[j]] and target[j][i] == sub[prefix[j]][cand] for j in range(i)):
                if target[i][i] != sub[cand][cand]:
                    continue
                found = extend(prefix + [cand])
                if found is not None:
                    return found
        return None

    found = extend([])
    return tuple(found) if found is not None else None


def restrict_to_subdiagram(spec: ParabolicSpec, nodes: Iterable[int]) -> ParabolicSpec:
    """Restrict a coloring to a connected set of simple roots (1-based labels).

    The sub-type is identified from the induced Cartan matrix and the nodes
    are re-labelled in that type's Bourbaki order.
    """
    chosen = sorted(set(nodes))
    if not chosen or chosen[0] < 1 or chosen[-1] > spec.rank:
        raise InvalidSubdiagram(f"nodes {chosen} are not simple roots of {spec.label}")
    idx = [c - 1 for c in chosen]
    edges = [(a, b) for a, b in _edges(spec.lie_type, spec.rank) if a in idx and b in idx]
    reached = {idx[0]}
    while True:
        grown = reached | {b for a, b in edges if a in reached} | {a for a, b in edges if b in reached}
        if grown == reached:
            break
        reached = grown
    if len(reached) != len(idx):
        raise InvalidSubdiagram(f"nodes {chosen} do not form a connected subdiagram of {spec.label}")
    full = _cartan(spec.lie_type, spec.rank)
    sub = [[full[a][b] for b in idx] for a in idx]
    for t, k in _candidate_types(len(idx)):
        perm = _match(sub, _cartan(t, k))
        if perm is not None:
            return ParabolicSpec(t, k, tuple(spec.coloring[idx[p]] for p in perm))
    raise InvalidSubdiagram(f"nodes {chosen} of {spec.label} do not form a simple diagram we know")


_COLORING = re.compile(r"^\s*([A-Za-z]\d+)\s*([:#])(.*)$")


def _numbers(body: str, text: str, offset: int) -> list[int]:
    values: list[int] = []
    pos = offset
    for token in body.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise SpecParseError(f"expected a non-negative integer, got {stripped!r}", text, pos)
        values.append(int(stripped))
        pos += len(token) + 1
    return values


def parse_spec(text: str) -> ParabolicSpec:
    """Parse ``A6:1,0,1,0,0,1`` (coloring) or ``C5#3,4,3`` (blocks) into a spec."""
    m = _COLORING.match(text)
    if not m:
        raise SpecParseError("expected TYPE:coloring or TYPE#blocks", text, 0)
    try:
        lie_type, rank = parse_type(m.group(1))
        validate_type(lie_type, rank)
    except ValueError as exc:
        raise SpecParseError(str(exc), text, m.start(1)) from None
    values = _numbers(m.group(3), text, m.start(3))
    if m.group(2) == ":":
        if len(values) != rank:
            raise SpecParseError(f"{m.group(1)} needs {rank} coloring entries, got {len(values)}", text, m.start(3))
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise SpecParseError(f"coloring entry {v} is not 0 or 1", text, m.start(3))
        return ParabolicSpec(lie_type, rank, tuple(values))
    if lie_type not in CLASSICAL:
        raise SpecParseError(f"block form is not available for {lie_type}", text, m.start(2))
    if any(v < 1 for v in values):
        raise SpecParseError("block sizes must be positive", text, m.start(3))
    want = ambient_size(lie_type, rank)
    if sum(values) != want:
        raise SpecParseError(f"blocks sum to {sum(values)}, {m.group(1)} needs {want}", text, m.start(3))
    try:
        return blocks_to_coloring(BlockSequence(lie_type, tuple(values)))
    except ValueError as exc:
        raise SpecParseError(str(exc), text, m.start(3)) from None


def format_spec(spec: ParabolicSpec, *, blocks: bool = False) -> str:
    if blocks and spec.is_classical:
        seq = coloring_to_blocks(spec)
        return f"{spec.label}#{','.join(map(str, seq.blocks))}"
    return str(spec)
