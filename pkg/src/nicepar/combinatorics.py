"""Partitions, compositions and the sequence-shape predicates used by the classifier."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        parts: list[int] = []
        for size in sorted(mult, reverse=True):
            if mult[size] < 0:
                raise ValueError(f"negative multiplicity for part {size}")
            parts.extend([size] * mult[size])
        return cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def dual(self) -> "Partition":
        return dual_partition(self)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_unimodal(seq: Sequence[int]) -> bool:
    """True iff ``seq`` weakly increases and then weakly decreases."""
    seq = tuple(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


def is_palindromic(seq: Sequence[int]) -> bool:
    seq = tuple(seq)
    return seq == seq[::-1]


def dual_partition(p: Partition | Sequence[int]) -> Partition:
    """Conjugate partition: the column lengths of the Young diagram."""
    parts = p.parts if isinstance(p, Partition) else tuple(sorted(p, reverse=True))
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for q in parts if q >= k) for k in range(1, parts[0] + 1)))


def all_same_parity(seq: Sequence[int]) -> bool:
    return len({x % 2 for x in seq}) <= 1


def odd_values_occur(seq: Sequence[int], allowed: Callable[[int], bool]) -> bool:
    """Check ``allowed(multiplicity)`` for every odd value present in ``seq``."""
    counts = Counter(seq)
    return all(allowed(c) for v, c in counts.items() if v % 2 == 1)


def iter_compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` in lexicographic order."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in iter_compositions(total - first):
            yield (first,) + rest


def enumerate_compositions(
    total: int, filter: Callable[[tuple[int, ...]], bool] | None = None
) -> list[Composition]:
    if total < 1:
        raise ValueError("total must be at least 1")
    keep = filter or (lambda _: True)
    return [Composition(c) for c in iter_compositions(total) if keep(c)]


def unimodal_palindromic_compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Unimodal palindromic compositions of ``total``, lexicographically.

    Built from the weakly increasing left half and an optional centre part,
    so the cost is governed by the (small) number of results rather than by
    the 2**(total-1) compositions.
    """
    found: list[tuple[int, ...]] = []

    def halves(remaining: int, floor: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(floor, remaining // 2 + 1):
            for rest in halves(remaining - 2 * first, first):
                yield (first,) + rest

    for half in halves(total, 1):
        used = 2 * sum(half)
        top = half[-1] if half else 1
        centre = total - used
        if centre == 0 and half:
            found.append(half + half[::-1])
        elif centre >= top and centre > 0:
            found.append(half + (centre,) + half[::-1])
    yield from sorted(found)
