"""Jordan forms of generic degree-one elements and centralizer dimensions, in closed form.

Block sequences are 1-based in the formulas below (n_1, ..., n_k), matching the
usual way these rank formulas are written; the code converts at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Partition, dual_partition
from .parabolic import BlockSequence, canonicalize_D, levi_dim

__all__ = [
    "DimensionRoute",
    "InternalInconsistency",
    "InvalidPartition",
    "JordanForm",
    "centralizer_dim",
    "dimension_route",
    "generic_rank",
    "generic_ranks_A",
    "generic_ranks_BD",
    "generic_ranks_C",
    "jordan_form",
    "nice_via_dimension",
    "rank_sequence",
]


class InternalInconsistency(ArithmeticError):
    """A closed-form computation produced an impossible value."""


class InvalidPartition(ValueError):
    """A partition that is not the Jordan type of a nilpotent in the given algebra."""


def _seq(blocks: BlockSequence | Sequence[int]) -> tuple[int, ...]:
    return tuple(blocks.blocks if isinstance(blocks, BlockSequence) else blocks)


def _window_min(n: Sequence[int], i: int, j: int) -> int:
    """min{n_i, ..., n_{i+j}} with 1-based i."""
    return min(n[i - 1 : i + j])


def generic_ranks_A(blocks: BlockSequence | Sequence[int], j: int) -> int:
    """rank x^j = sum over windows of j+1 consecutive blocks of the smallest block."""
    if j < 1:
        raise ValueError("j must be >= 1")
    n = _seq(blocks)
    return sum(_window_min(n, i, j) for i in range(1, len(n) - j + 1))


def _even_down(v: int) -> int:
    return v - 1 if v % 2 else v


def generic_ranks_C(blocks: BlockSequence | Sequence[int], j: int) -> int:
    if j < 1:
        raise ValueError("j must be >= 1")
    n = _seq(blocks)
    if len(n) % 2 == 0:
        return generic_ranks_A(n, j)
    r = len(n) // 2  # n_{r+1} is the middle block

    def r_ij(i: int) -> int:
        if i < 1 or i + j > 2 * r + 1:
            return 0
        s = _window_min(n, i, j)
        if i + j <= r + 1 or i >= r + 1:
            return s
        u = min(r + 1 - i, i + j - r - 1)
        v = min(n[r - u : r + 1 + u])  # n_{r+1-u} .. n_{r+1+u}
        return min(s, _even_down(v))

    return sum(r_ij(i) for i in range(1, 2 * r + 2))


def generic_ranks_BD(blocks: BlockSequence | Sequence[int], j: int, is_B: bool) -> int:
    """Orthogonal case.  With an even count the windows that cross the centre,
    including those starting at the last block of the first half, are capped by
    the largest even number not exceeding the smallest central window.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    n = _seq(blocks)
    if not is_B:
        n = canonicalize_D(n)
    if len(n) % 2 == 1:
        return generic_ranks_A(n, j)
    r = len(n) // 2

    def r_ij(i: int) -> int:
        if i < 1 or i + j > 2 * r:
            return 0
        s = _window_min(n, i, j)
        if i + j <= r or i >= r + 1:
            return s
        u = min(r + 1 - i, i + j - r)
        v = min(n[r - u : r + u])  # n_{r+1-u} .. n_{r+u}
        return min(s, _even_down(v))

    return sum(r_ij(i) for i in range(1, 2 * r + 1))


def generic_rank(blocks: BlockSequence, j: int) -> int:
    """rank x^j for generic x in g_1, dispatching on the block sequence's type."""
    t = blocks.lie_type
    if t == "A":
        return generic_ranks_A(blocks, j)
    if t == "C":
        return generic_ranks_C(blocks, j)
    return generic_ranks_BD(blocks, j, is_B=(t == "B"))


def rank_sequence(blocks: BlockSequence) -> list[int]:
    """[rank x^0, rank x^1, ...] ending with the first 0."""
    ranks = [blocks.total]
    j = 1
    while ranks[-1] > 0:
        ranks.append(generic_rank(blocks, j))
        j += 1
    return ranks


@dataclass(frozen=True)
class JordanForm:
    multiplicities: dict[int, int]
    ranks: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(k * a for k, a in self.multiplicities.items())

    @property
    def partition(self) -> Partition:
        return Partition.from_multiplicities(self.multiplicities)

    @property
    def kernel_dims(self) -> tuple[int, ...]:
        """dim ker x^j for j = 1, 2, ... up to nilpotency."""
        n = self.ranks[0]
        return tuple(n - r for r in self.ranks[1:])


def jordan_form(blocks: BlockSequence) -> JordanForm:
    ranks = rank_sequence(blocks)
    padded = ranks + [0]
    mult: dict[int, int] = {}
    for k in range(1, len(ranks)):
        a = padded[k - 1] - 2 * padded[k] + padded[k + 1]
        if a < 0:
            raise InternalInconsistency(f"{blocks}: {a} Jordan blocks of size {k} from ranks {ranks}")
        if a:
            mult[k] = a
    form = JordanForm(mult, tuple(ranks))
    if form.size != blocks.total:
        raise InternalInconsistency(f"{blocks}: Jordan blocks fill {form.size} of {blocks.total}")
    if any(a <= b for a, b in zip(ranks, ranks[1:])):
        raise InternalInconsistency(f"{blocks}: ranks {ranks} do not decrease strictly")
    return form


def _check_parity(p: Partition, lie_type: str) -> None:
    mult = p.multiplicities()
    if lie_type == "C":
        bad = [k for k, m in mult.items() if k % 2 and m % 2]
        if bad:
            raise InvalidPartition(f"{p}: odd parts {bad} have odd multiplicity, impossible in sp")
    elif lie_type in ("B", "D"):
        bad = [k for k, m in mult.items() if k % 2 == 0 and m % 2]
        if bad:
            raise InvalidPartition(f"{p}: even parts {bad} have odd multiplicity, impossible in so")
        if (p.total % 2 == 1) != (lie_type == "B"):
            raise InvalidPartition(f"{p}: total {p.total} does not fit type {lie_type}")
    elif lie_type != "A":
        raise ValueError(f"no Jordan-type centralizer formula for {lie_type}")


def centralizer_dim(partition: Partition | Sequence[int], lie_type: str) -> int:
    """dim of the centralizer of a nilpotent with this Jordan type.

    Type A is measured in gl_N (subtract 1 for sl_N).
    """
    p = partition if isinstance(partition, Partition) else Partition.from_parts(partition)
    _check_parity(p, lie_type)
    squares = sum(m * m for m in dual_partition(p).parts)
    odd = sum(1 for part in p.parts if part % 2)
    if lie_type == "A":
        return squares
    if lie_type == "C":
        return (squares + odd) // 2
    return (squares - odd) // 2


@dataclass(frozen=True)
class DimensionRoute:
    blocks: BlockSequence
    jordan: JordanForm
    centralizer: int
    levi: int

    @property
    def nice(self) -> bool:
        return self.centralizer == self.levi

    @property
    def excess(self) -> int:
        return self.centralizer - self.levi


def dimension_route(blocks: BlockSequence) -> DimensionRoute:
    form = jordan_form(blocks)
    cdim = centralizer_dim(form.partition, blocks.lie_type)
    mdim = levi_dim(blocks)
    if cdim < mdim:
        raise InternalInconsistency(f"{blocks}: centralizer {cdim} smaller than Levi {mdim}")
    return DimensionRoute(blocks, form, cdim, mdim)


def nice_via_dimension(blocks: BlockSequence) -> bool:
    return dimension_route(blocks).nice
