"""Exact matrices over the rationals: rank, nullspace, products and powers.

No floating point is used.  Ranks of integer matrices are computed by
fraction-free elimination with row-content reduction; a rank modulo a large
prime is used only as a shortcut when it already certifies full rank (the
modular rank never exceeds the rational one).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

_PRIME = 2_147_483_629  # < 2**31, so products fit in int64


class ExactMatrix:
    """Dense matrix with ``int`` or ``Fraction`` entries."""

    __slots__ = ("n_rows", "n_cols", "rows")

    def __init__(self, rows: Iterable[Sequence[int | Fraction]], n_cols: int | None = None) -> None:
        self.rows: list[list[int | Fraction]] = [list(r) for r in rows]
        self.n_rows = len(self.rows)
        if n_cols is None:
            n_cols = len(self.rows[0]) if self.rows else 0
        self.n_cols = n_cols
        if any(len(r) != n_cols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "ExactMatrix":
        return cls([[0] * n_cols for _ in range(n_rows)], n_cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int, entries: dict[tuple[int, int], int | Fraction]) -> "ExactMatrix":
        m = cls.zeros(n_rows, n_cols)
        for (i, j), v in entries.items():
            m.rows[i][j] = v
        return m

    def __getitem__(self, ij: tuple[int, int]) -> int | Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows and self.n_cols == other.n_cols

    def __repr__(self) -> str:
        return f"ExactMatrix({self.n_rows}x{self.n_cols})"

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def entries(self) -> dict[tuple[int, int], int | Fraction]:
        return {(i, j): v for i, r in enumerate(self.rows) for j, v in enumerate(r) if v}

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], self.n_rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.n_cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.n_cols)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self.rows], self.n_cols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.n_cols
        out = []
        for r in self.rows:
            nz = [(k, v) for k, v in enumerate(r) if v]
            out.append([sum(v * col[k] for k, v in nz) for col in cols])
        return ExactMatrix(out, other.n_cols)

    def __pow__(self, k: int) -> "ExactMatrix":
        if self.n_rows != self.n_cols or k < 0:
            raise ValueError("only non-negative powers of square matrices")
        result = ExactMatrix.identity(self.n_rows)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def integer_rows(self) -> list[list[int]]:
        """Rows scaled by their common denominators."""
        out = []
        for r in self.rows:
            den = 1
            for v in r:
                if isinstance(v, Fraction):
                    den = den * v.denominator // math.gcd(den, v.denominator)
            out.append([int(v * den) for v in r])
        return out

    def rank(self) -> int:
        return integer_rank(self.integer_rows(), self.n_cols)

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of {v : M v = 0} from the reduced row echelon form."""
        rref, pivots = reduced_row_echelon(self.rows, self.n_cols)
        free = [c for c in range(self.n_cols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.n_cols
            v[f] = Fraction(1)
            for row, p in zip(rref, pivots):
                v[p] = -row[f]
            basis.append(v)
        return basis


def reduced_row_echelon(
    rows: Sequence[Sequence[int | Fraction]], n_cols: int
) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(v) for v in r] for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def modular_rank(rows: Sequence[Sequence[int]], n_cols: int, prime: int = _PRIME) -> int:
    """Rank over GF(prime); a lower bound for the rational rank."""
    if not rows or not n_cols:
        return 0
    a = np.array([[v % prime for v in r] for r in rows], dtype=np.int64)
    n_rows = a.shape[0]
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), prime - 2, prime)
        a[r, c:] = (a[r, c:] * inv) % prime
        below = a[r + 1 :, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + r + 1
            a[idx, c:] = (a[idx, c:] - np.outer(below[mask], a[r, c:]) % prime) % prime
        r += 1
    return r


def integer_rank(rows: Sequence[Sequence[int]], n_cols: int) -> int:
    """Exact rank of an integer matrix."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    bound = min(len(work), n_cols)
    if bound > 8 and modular_rank(work, n_cols) == bound:
        return bound
    return _elimination_rank(work, n_cols)


def _elimination_rank(work: list[list[int]], n_cols: int) -> int:
    rank = 0
    for c in range(n_cols):
        if not work:
            break
        piv = None
        best = None
        for i, row in enumerate(work):
            v = row[c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        prow = work.pop(piv)
        p = prow[c]
        rest = []
        for row in work:
            a = row[c]
            if a:
                new = [p * x - a * y for x, y in zip(row, prow)]
                g = math.gcd(*new)
                if g > 1:
                    new = [x // g for x in new]
                if any(new):
                    rest.append(new)
            else:
                rest.append(row)
        work = rest
        rank += 1
    return rank
