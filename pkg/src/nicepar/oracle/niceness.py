"""Exact niceness verification on the Chevalley-basis model of any simple type.

The grading of g comes from the coloring: e_a sits in degree sum(u_i c_i(a))
and the Cartan subalgebra in degree 0.  For x in g_1 the map ad(x) is block
diagonal with blocks g_j -> g_{j+1}, so every rank below is a sum of small
exact block ranks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Protocol

from .algebra import ChevalleyAlgebra, Vector, chevalley_algebra
from .exact import ExactMatrix, integer_rank
from .roots import Root, degree

DEFAULT_SEED = 20041005
DEFAULT_TRIALS = 5
COEFFICIENTS = [c for c in range(-9, 10) if c]


class IndeterminateError(RuntimeError):
    """No generic sample was found within the allowed number of trials."""


class OracleInconsistency(IndeterminateError):
    """Two exact routes that must agree did not."""


class SpecLike(Protocol):
    lie_type: str
    rank: int
    coloring: tuple[int, ...]


@dataclass(frozen=True)
class GenericElement:
    """x = sum c_a e_a over the degree-one roots, every c_a nonzero."""

    coefficients: tuple[tuple[Root, int], ...]

    def as_dict(self) -> dict[Root, int]:
        return dict(self.coefficients)


class GradedAlgebra:
    """A simple Lie algebra together with the grading of one coloring."""

    def __init__(self, lie_type: str, rank: int, coloring: tuple[int, ...]) -> None:
        if len(coloring) != rank:
            raise ValueError("coloring length must equal the rank")
        self.lie_type = lie_type
        self.rank = rank
        self.coloring = tuple(coloring)
        self.algebra: ChevalleyAlgebra = chevalley_algebra(lie_type, rank)
        system = self.algebra.system
        self.pieces: dict[int, list[int]] = {0: list(range(rank))}
        for k, r in enumerate(system.roots):
            self.pieces.setdefault(degree(r, self.coloring), []).append(rank + k)
        self.position = {j: {b: i for i, b in enumerate(basis)} for j, basis in self.pieces.items()}
        self.top = max(self.pieces)

    def dim(self, j: int) -> int:
        return len(self.pieces.get(j, ()))

    def dims(self) -> dict[int, int]:
        return {j: len(b) for j, b in sorted(self.pieces.items())}

    @property
    def degree_one_roots(self) -> list[Root]:
        return [self.algebra.basis_root(b) for b in self.pieces.get(1, [])]

    @property
    def nilradical_dim(self) -> int:
        return sum(len(b) for j, b in self.pieces.items() if j > 0)

    def element(self, coefficients: dict[Root, int]) -> Vector:
        return {self.algebra.root_index(r): c for r, c in coefficients.items() if c}

    def is_degree_one(self, x: Vector) -> bool:
        ones = set(self.pieces.get(1, ()))
        return all(k in ones for k, v in x.items() if v)

    def ad_block(self, x: Vector, j: int) -> ExactMatrix:
        """Matrix of ad(x): g_j -> g_{j+1} in the Chevalley basis."""
        if not self.is_degree_one(x):
            raise ValueError("x is not in g_1 for this grading")
        src = self.pieces.get(j, [])
        dst = self.position.get(j + 1, {})
        rows = [[0] * len(src) for _ in range(len(dst))]
        for col, b in enumerate(src):
            for k, c in x.items():
                for t, v in self.algebra.bracket_basis(k, b).items():
                    rows[dst[t]][col] += c * v
        return ExactMatrix(rows, len(src))

    def block_rank(self, x: Vector, j: int) -> int:
        if not self.dim(j) or not self.dim(j + 1):
            return 0
        block = self.ad_block(x, j)
        return integer_rank(block.rows, block.n_cols)

    def sample(self, rng: random.Random) -> GenericElement:
        return GenericElement(tuple((r, rng.choice(COEFFICIENTS)) for r in self.degree_one_roots))


@lru_cache(maxsize=4096)
def graded_algebra(lie_type: str, rank: int, coloring: tuple[int, ...]) -> GradedAlgebra:
    return GradedAlgebra(lie_type, rank, coloring)


def graded_for(spec: SpecLike) -> GradedAlgebra:
    return graded_algebra(spec.lie_type, spec.rank, tuple(spec.coloring))


def ad_map(x: Vector, j: int, spec: "SpecLike") -> ExactMatrix:
    """Matrix of ad(x): g_j -> g_{j+1} for the grading of ``spec``."""
    return graded_for(spec).ad_block(x, j)


def ad_rank_total(x: Vector, graded: GradedAlgebra) -> int:
    """rank of ad(x) on all of g for homogeneous x in g_1."""
    lo = min(graded.pieces)
    return sum(graded.block_rank(x, j) for j in range(lo, graded.top))


def centralizer_dim_graded(x: Vector, graded: GradedAlgebra) -> int:
    return graded.algebra.dimension - ad_rank_total(x, graded)


def centralizer_dim_full(x: Vector, algebra: ChevalleyAlgebra) -> int:
    """dim g^x for an arbitrary element, from the full ad matrix."""
    d = algebra.dimension
    rows = [[0] * d for _ in range(d)]
    for col in range(d):
        for k, c in x.items():
            if not c:
                continue
            for t, v in algebra.bracket_basis(k, col).items():
                rows[t][col] += c * v
    return d - integer_rank(rows, d)


def surjectivity_check(x: Vector, spec: SpecLike) -> bool:
    """ad(x): g_j -> g_{j+1} onto for every j >= 0."""
    graded = graded_for(spec)
    return all(graded.block_rank(x, j) == graded.dim(j + 1) for j in range(0, graded.top))


def injectivity_check(x: Vector, spec: SpecLike) -> bool:
    """ad(x): g_{j-1} -> g_j one-to-one for every j <= 0."""
    graded = graded_for(spec)
    lo = min(graded.pieces)
    return all(graded.block_rank(x, j - 1) == graded.dim(j - 1) for j in range(lo + 1, 1))


def centralizer_dim_oracle(x: Vector, spec: SpecLike) -> int:
    """dim g^x for any x, homogeneous or not."""
    graded = graded_for(spec)
    if graded.is_degree_one(x):
        return centralizer_dim_graded(x, graded)
    return centralizer_dim_full(x, graded.algebra)


def dimension_obstruction(graded: GradedAlgebra) -> int | None:
    """A degree j where no x in g_1 can map g_j onto g_{j+1}, if any.

    For j >= 1 the rank is at most dim g_j; for j = 1 it is at most
    dim g_1 - 1 because x itself lies in the kernel.
    """
    if graded.dim(1) and graded.dim(1) <= graded.dim(2):
        return 1
    for j in range(2, graded.top):
        if graded.dim(j) < graded.dim(j + 1):
            return j
    return None


@dataclass
class OracleVerdict:
    nice: bool
    reason: str
    trials_used: int = 0
    centralizer_dim: int | None = None
    levi_dim: int = 0
    element: GenericElement | None = field(default=None, repr=False)


def is_nice_oracle(spec: SpecLike, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> OracleVerdict:
    """Decide niceness by exact computation with sampled elements of g_1.

    A sample counts only if it is generic, meaning ad(x) maps g_0 onto g_1.
    The generic elements form a single open orbit of the Levi group, so the
    first generic sample decides the question; further trials only serve to
    find one.  The verdict is cross-checked against dim g^x = dim m.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    graded = graded_for(spec)
    levi = graded.dim(0)
    if graded.dim(1) == 0:
        return OracleVerdict(True, "trivial-nilradical", 0, graded.algebra.dimension, levi)
    blocked = dimension_obstruction(graded)
    if blocked is not None:
        return OracleVerdict(False, f"dimension-bound-at-{blocked}", 0, None, levi)
    coloring = "".join(map(str, spec.coloring))
    rng = random.Random(f"{seed}:{spec.lie_type}{spec.rank}:{coloring}")
    for t in range(1, trials + 1):
        sample = graded.sample(rng)
        x = graded.element(sample.as_dict())
        if graded.block_rank(x, 0) != graded.dim(1):
            continue
        onto = all(graded.block_rank(x, j) == graded.dim(j + 1) for j in range(1, graded.top))
        cdim = centralizer_dim_graded(x, graded)
        if onto != (cdim == levi):
            raise OracleInconsistency(
                f"{spec.lie_type}{spec.rank} {spec.coloring}: surjectivity {onto} but dim g^x={cdim}, dim m={levi}"
            )
        reason = "richardson-in-g1" if onto else "generic-not-surjective"
        return OracleVerdict(onto, reason, t, cdim, levi, sample)
    raise IndeterminateError(f"no generic element of g_1 in {trials} trials for {spec.lie_type}{spec.rank} {coloring}")
