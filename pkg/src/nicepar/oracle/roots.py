"""Root systems of the simple Lie algebras and their Chevalley structure constants.

Roots are integer coefficient vectors over the simple roots in Bourbaki
numbering.  Structure constants N(a, b) with ``[e_a, e_b] = N(a, b) e_{a+b}``
are fixed by declaring every extraspecial pair positive and propagating
through the standard relations between the N's.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

Root = tuple[int, ...]

EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
CLASSICAL = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


def parse_type(name: str) -> tuple[str, int]:
    """Split ``"D5"``/``"E7"`` into a (series letter or exceptional name, rank) pair."""
    name = name.strip().upper()
    if name in EXCEPTIONAL_RANKS:
        return name, EXCEPTIONAL_RANKS[name]
    if len(name) >= 2 and name[0] in CLASSICAL and name[1:].isdigit():
        return name[0], int(name[1:])
    raise ValueError(f"unknown Lie type {name!r}")


def type_label(lie_type: str, rank: int) -> str:
    return lie_type if lie_type in EXCEPTIONAL_RANKS else f"{lie_type}{rank}"


def validate_type(lie_type: str, rank: int, *, strict: bool = True) -> None:
    if lie_type in EXCEPTIONAL_RANKS:
        if rank != EXCEPTIONAL_RANKS[lie_type]:
            raise ValueError(f"{lie_type} has rank {EXCEPTIONAL_RANKS[lie_type]}, not {rank}")
        return
    if lie_type not in CLASSICAL:
        raise ValueError(f"unknown Lie type {lie_type!r}")
    floor = MIN_RANK[lie_type] if strict else 1
    if rank < floor:
        raise ValueError(f"type {lie_type} needs rank >= {floor}, got {rank}")


def _edges(lie_type: str, rank: int) -> list[tuple[int, int]]:
    if lie_type in ("A", "B", "C", "F4", "G2"):
        return [(i, i + 1) for i in range(rank - 1)]
    if lie_type == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    # E6/E7/E8: 1-3-4-5-6-7-8 with 2 attached to 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]


def gram_matrix(lie_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Integer-scaled inner products (alpha_i, alpha_j) of the simple roots."""
    validate_type(lie_type, rank, strict=False)
    n = rank
    lengths = [2] * n
    links: dict[tuple[int, int], int] = {e: -1 for e in _edges(lie_type, n)}
    if lie_type == "B":
        lengths = [4] * (n - 1) + [2]
        links = {e: -2 for e in links}
    elif lie_type == "C":
        lengths = [2] * (n - 1) + [4]
        if n >= 2:
            links[(n - 2, n - 1)] = -2
    elif lie_type == "F4":
        lengths = [4, 4, 2, 2]
        links = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif lie_type == "G2":
        lengths = [2, 6]
        links = {(0, 1): -3}
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for (i, j), v in links.items():
        g[i][j] = g[j][i] = v
    return tuple(tuple(row) for row in g)


class RootSystem:
    """Roots and Chevalley structure constants of one simple type.

    Instances are built once per type (see :func:`build_root_system`) and are
    read-only afterwards.
    """

    def __init__(self, lie_type: str, rank: int) -> None:
        validate_type(lie_type, rank, strict=False)
        self.lie_type = lie_type
        self.rank = rank
        self.gram = gram_matrix(lie_type, rank)
        n = rank
        # cartan[i][j] = <alpha_j, alpha_i^vee>
        self.cartan = tuple(
            tuple(2 * self.gram[i][j] // self.gram[i][i] for j in range(n)) for i in range(n)
        )
        self.simple: list[Root] = [tuple(int(i == k) for i in range(n)) for k in range(n)]
        self.positive: list[Root] = self._positive_roots()
        self.roots: list[Root] = self.positive + [neg(r) for r in self.positive]
        self.index: dict[Root, int] = {r: k for k, r in enumerate(self.roots)}
        self._pos_order = {r: k for k, r in enumerate(self.positive)}
        self._pos_table: dict[tuple[Root, Root], int] = {}
        self._build_positive_constants()

    # -- basic root arithmetic -------------------------------------------------

    def inner(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def is_root(self, a: Root) -> bool:
        return a in self.index

    def height(self, a: Root) -> int:
        return sum(a)

    def pairing(self, a: Root, i: int) -> int:
        """<a, alpha_i^vee>: the eigenvalue of h_i on e_a."""
        return 2 * self.inner(a, self.simple[i]) // self.gram[i][i]

    def coroot_coefficients(self, a: Root) -> tuple[int, ...]:
        """Coefficients of h_a in the basis h_1..h_n of simple coroots."""
        norm = self.inner(a, a)
        out = []
        for i, c in enumerate(a):
            q = Fraction(c * self.gram[i][i], norm)
            if q.denominator != 1:
                raise ArithmeticError("non-integral coroot coefficient")
            out.append(int(q))
        return tuple(out)

    @property
    def dimension(self) -> int:
        return self.rank + len(self.roots)

    def _positive_roots(self) -> list[Root]:
        found: set[Root] = set(self.simple)
        layer = list(self.simple)
        while layer:
            nxt: list[Root] = []
            for b in layer:
                for i, s in enumerate(self.simple):
                    p = 0
                    probe = sub(b, s)
                    while probe in found:
                        p += 1
                        probe = sub(probe, s)
                    q = p - self.pairing(b, i)
                    cand = add(b, s)
                    if q > 0 and cand not in found:
                        found.add(cand)
                        nxt.append(cand)
            layer = nxt
        return sorted(found, key=lambda r: (sum(r), r))

    # -- structure constants ---------------------------------------------------

    def _string_p(self, a: Root, b: Root) -> int:
        """Largest p with b - p a a root."""
        p = 0
        probe = sub(b, a)
        while probe in self.index:
            p += 1
            probe = sub(probe, a)
        return p

    def _build_positive_constants(self) -> None:
        by_sum: dict[Root, list[tuple[Root, Root]]] = {}
        for a in self.positive:
            for b in self.positive:
                c = add(a, b)
                if c in self.index and self._pos_order[a] < self._pos_order[b]:
                    by_sum.setdefault(c, []).append((a, b))
        for xi in self.positive:  # increasing height
            pairs = by_sum.get(xi)
            if not pairs:
                continue
            pairs.sort(key=lambda ab: self._pos_order[ab[0]])
            alpha, beta = pairs[0]
            n_ab = self._string_p(alpha, beta) + 1
            self._pos_table[(alpha, beta)] = n_ab
            self._pos_table[(beta, alpha)] = -n_ab
            norm_xi = self.inner(xi, xi)
            for gamma, delta in pairs[1:]:
                total = Fraction(0)
                bg = sub(beta, gamma)
                ad = sub(alpha, delta)
                if bg in self.index and ad in self.index:
                    total += Fraction(
                        self.N(beta, neg(gamma)) * self.N(alpha, neg(delta)), self.inner(bg, bg)
                    )
                ag = sub(alpha, gamma)
                bd = sub(beta, delta)
                if ag in self.index and bd in self.index:
                    total += Fraction(
                        self.N(neg(gamma), alpha) * self.N(beta, neg(delta)), self.inner(ag, ag)
                    )
                value = total * norm_xi / n_ab
                if value.denominator != 1 or value == 0:
                    raise ArithmeticError(f"bad structure constant for {gamma}+{delta}")
                self._pos_table[(gamma, delta)] = int(value)
                self._pos_table[(delta, gamma)] = -int(value)

    def N(self, a: Root, b: Root) -> int:
        """Structure constant of [e_a, e_b]; zero when a + b is not a root."""
        c = add(a, b)
        if c not in self.index:
            return 0
        a_pos, b_pos = sum(a) > 0, sum(b) > 0
        if a_pos and b_pos:
            return self._pos_table[(a, b)]
        if not a_pos and not b_pos:
            return -self._pos_table[(neg(a), neg(b))]
        if not a_pos:
            return -self.N(b, a)
        # a positive, b negative
        if sum(c) > 0:
            return self.inner(c, c) * self.N(c, neg(b)) // self.inner(a, a)
        return self.inner(c, c) * self.N(neg(c), a) // self.inner(b, b)

    def roots_of_degree(self, coloring: tuple[int, ...], j: int) -> list[Root]:
        return [r for r in self.roots if degree(r, coloring) == j]

    def __repr__(self) -> str:
        return f"RootSystem({type_label(self.lie_type, self.rank)}, {len(self.roots)} roots)"


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Root) -> Root:
    return tuple(-x for x in a)


def degree(root: Root, coloring: tuple[int, ...]) -> int:
    return sum(c * u for c, u in zip(root, coloring))


@lru_cache(maxsize=None)
def build_root_system(lie_type: str, rank: int) -> RootSystem:
    return RootSystem(lie_type, rank)


def algebra_dimension(lie_type: str, rank: int) -> int:
    n = rank
    return {
        "A": (n + 1) ** 2 - 1,
        "B": n * (2 * n + 1),
        "C": n * (2 * n + 1),
        "D": n * (2 * n - 1),
        "G2": 14,
        "F4": 52,
        "E6": 78,
        "E7": 133,
        "E8": 248,
    }[lie_type]


def iter_colorings(rank: int) -> Iterator[tuple[int, ...]]:
    """All 0/1 colorings of ``rank`` nodes in lexicographic order."""
    for k in range(2**rank):
        yield tuple((k >> (rank - 1 - i)) & 1 for i in range(rank))
