"""The classical algebras as explicit matrices: sl_N, so_N and sp_N inside gl_N.

so_N preserves the form with ones on the skew diagonal (L); sp_{2n} preserves
M = [[0, L], [-L, 0]].  A matrix X lies in the algebra iff X F + F X^T = 0
for the relevant form F.  Everything is computed with exact integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .exact import ExactMatrix, integer_rank

SparseMatrix = dict[tuple[int, int], int]  # 0-based (row, col) -> value


def form_matrix(lie_type: str, size: int) -> ExactMatrix | None:
    """L for B/D, M for C, None for A."""
    if lie_type == "A":
        return None
    entries: dict[tuple[int, int], int] = {}
    for i in range(size):
        j = size - 1 - i
        entries[(i, j)] = 1 if lie_type in ("B", "D") or i < size // 2 else -1
    return ExactMatrix.from_entries(size, size, entries)


def in_algebra(x: ExactMatrix, lie_type: str) -> bool:
    n = x.shape[0]
    if lie_type == "A":
        return sum(x[i, i] for i in range(n)) == 0
    f = form_matrix(lie_type, n)
    return (x @ f + f @ x.transpose()).is_zero()


def _eta(i: int, size: int) -> int:
    return 1 if i < size // 2 else -1


@dataclass(frozen=True)
class MatrixModel:
    """A classical algebra with the grading of a block sequence."""

    lie_type: str
    blocks: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out: list[int] = []
        for k, b in enumerate(self.blocks):
            out.extend([k] * b)
        return tuple(out)

    def degree(self, i: int, j: int) -> int:
        return self.block_of[j] - self.block_of[i]

    def adjoint(self, i: int, j: int, value: int) -> tuple[int, int, int]:
        """Position and value forced by membership once (i, j) carries ``value``."""
        n = self.size
        ai, aj = n - 1 - j, n - 1 - i
        if self.lie_type == "C":
            return ai, aj, -_eta(i, n) * _eta(j, n) * value
        return ai, aj, -value

    @cached_property
    def basis(self) -> dict[int, list[SparseMatrix]]:
        """Basis of g, grouped by degree."""
        n = self.size
        pieces: dict[int, list[SparseMatrix]] = {}

        def put(m: SparseMatrix) -> None:
            (i, j) = next(iter(m))
            pieces.setdefault(self.degree(i, j), []).append(m)

        if self.lie_type == "A":
            for i in range(n):
                for j in range(n):
                    if i != j:
                        put({(i, j): 1})
            for i in range(n - 1):
                put({(i, i): 1, (i + 1, i + 1): -1})
            return pieces
        seen: set[tuple[int, int]] = set()
        for i in range(n):
            for j in range(n):
                if (i, j) in seen:
                    continue
                ai, aj, v = self.adjoint(i, j, 1)
                seen.add((i, j))
                seen.add((ai, aj))
                if (ai, aj) == (i, j):
                    if v == 1:
                        put({(i, j): 1})
                    continue
                put({(i, j): 1, (ai, aj): v})
        return pieces

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def dim(self, j: int) -> int:
        return len(self.basis.get(j, ()))

    def generic_element(self, rng: random.Random) -> ExactMatrix:
        entries: dict[tuple[int, int], int] = {}
        coeffs = [c for c in range(-9, 10) if c]
        for m in self.basis.get(1, []):
            c = rng.choice(coeffs)
            for pos, v in m.items():
                entries[pos] = entries.get(pos, 0) + c * v
        return ExactMatrix.from_entries(self.size, self.size, entries)

    def is_degree_one(self, x: ExactMatrix) -> bool:
        return all(self.degree(i, j) == 1 for (i, j), v in x.entries().items() if v)

    def ad_rank(self, x: ExactMatrix) -> int:
        """rank of ad(x) on g, computed in gl_N coordinates."""
        xs = {pos: v for pos, v in x.entries().items() if v}
        homogeneous = self.is_degree_one(x)
        groups = list(self.basis.values()) if homogeneous else [[m for b in self.basis.values() for m in b]]
        total = 0
        for group in groups:
            images: list[dict[tuple[int, int], int]] = []
            for y in group:
                out: dict[tuple[int, int], int] = {}
                for (a, b), xv in xs.items():
                    for (c, d), yv in y.items():
                        if b == c:
                            out[(a, d)] = out.get((a, d), 0) + xv * yv
                        if d == a:
                            out[(c, b)] = out.get((c, b), 0) - yv * xv
                images.append({k: v for k, v in out.items() if v})
            positions = sorted({p for img in images for p in img})
            if not positions:
                continue
            index = {p: r for r, p in enumerate(positions)}
            rows = [[0] * len(group) for _ in positions]
            for col, img in enumerate(images):
                for p, v in img.items():
                    rows[index[p]][col] = v
            total += integer_rank(rows, len(group))
        return total

    def centralizer_dim(self, x: ExactMatrix) -> int:
        return self.dimension - self.ad_rank(x)

    def levi_dim(self) -> int:
        return self.dim(0)


def matrix_power_ranks(x: ExactMatrix, max_j: int | None = None) -> list[int]:
    """[rank x, rank x^2, ...], stopping after the first zero or at max_j."""
    n, m = x.shape
    if n != m:
        raise ValueError("matrix must be square")
    limit = max_j if max_j is not None else n
    ranks: list[int] = []
    power = x
    for _ in range(limit):
        r = integer_rank(power.integer_rows(), n)
        ranks.append(r)
        if r == 0:
            break
        power = power @ x
    return ranks
