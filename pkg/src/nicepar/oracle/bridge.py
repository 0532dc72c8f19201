"""Transport elements of the classical matrix models into the Chevalley basis.

The isomorphism is the one sending each simple root vector e_i to the matrix
unit of alpha_i.  Every other positive root vector then maps to c_a times the
model's basis matrix for that root, and the scalars follow from
c_{a+b} N_chev(a, b) = c_a c_b N_mat(a, b) with a simple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Vector, chevalley_algebra
from .exact import ExactMatrix
from .matrix_model import MatrixModel, SparseMatrix
from .roots import Root, build_root_system


def _epsilon(lie_type: str, size: int, p: int) -> dict[int, int]:
    """Weight of the p-th standard basis vector (0-based) as a sparse epsilon vector."""
    if lie_type == "A":
        return {p: 1}
    q = size - 1 - p
    if p < q:
        return {p: 1}
    if p > q:
        return {q: -1}
    return {}


def _weight(lie_type: str, size: int, i: int, j: int) -> tuple[int, ...]:
    dim = size if lie_type == "A" else size // 2
    w = [0] * dim
    for k, v in _epsilon(lie_type, size, i).items():
        w[k] += v
    for k, v in _epsilon(lie_type, size, j).items():
        w[k] -= v
    return tuple(w)


def _simple_positions(lie_type: str, rank: int) -> list[tuple[int, int]]:
    pos = [(k, k + 1) for k in range(rank - 1)]
    if lie_type == "D":
        pos.append((rank - 2, rank))
    else:
        pos.append((rank - 1, rank))
    return pos


def _mul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out: SparseMatrix = {}
    for (i, k), v in a.items():
        for (k2, j), w in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + v * w
    return out


def _bracket(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out = _mul(a, b)
    for pos, v in _mul(b, a).items():
        out[pos] = out.get(pos, 0) - v
    return {p: v for p, v in out.items() if v}


@lru_cache(maxsize=None)
def _root_matrices(lie_type: str, rank: int) -> tuple[dict[Root, SparseMatrix], dict[tuple[int, int], Root]]:
    """Model basis matrix for every positive root, and the root of each matrix position."""
    size = {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[lie_type]
    model = MatrixModel(lie_type, (1,) * size)
    system = build_root_system(lie_type, rank)
    simple_w = [_weight(lie_type, size, i, j) for i, j in _simple_positions(lie_type, rank)]
    by_weight: dict[tuple[int, ...], Root] = {}
    for root in system.positive:
        w = tuple(sum(c * sw[k] for c, sw in zip(root, simple_w)) for k in range(len(simple_w[0])))
        by_weight[w] = root
    mats: dict[Root, SparseMatrix] = {}
    where: dict[tuple[int, int], Root] = {}
    for m in (m for piece in model.basis.values() for m in piece):
        i, j = next(iter(m))
        if i == j:
            continue
        root = by_weight.get(_weight(lie_type, size, i, j))
        if root is None:
            continue
        mats[root] = m
        for pos in m:
            where[pos] = root
    return mats, where


@lru_cache(maxsize=None)
def _scalars(lie_type: str, rank: int) -> dict[Root, Fraction]:
    mats, _ = _root_matrices(lie_type, rank)
    system = build_root_system(lie_type, rank)
    c: dict[Root, Fraction] = {}
    for root in system.positive:  # sorted by height
        if sum(root) == 1:
            c[root] = Fraction(1)
            continue
        for k in range(rank):
            if root[k] == 0:
                continue
            alpha = system.simple[k]
            beta = tuple(x - y for x, y in zip(root, alpha))
            if beta not in c:
                continue
            image = _bracket(mats[alpha], mats[beta])
            pos, target = next(iter(mats[root].items()))
            n_mat = Fraction(image.get(pos, 0), target)
            n_chev = system.N(alpha, beta)
            if n_mat == 0 or n_chev == 0:
                continue
            c[root] = c[alpha] * c[beta] * n_mat / n_chev
            break
        else:
            raise RuntimeError(f"could not reach root {root}")
    return c


def to_chevalley(x: ExactMatrix, lie_type: str, rank: int) -> Vector:
    """Coordinates of an upper-triangular element of the model in the Chevalley basis."""
    mats, where = _root_matrices(lie_type, rank)
    c = _scalars(lie_type, rank)
    algebra = chevalley_algebra(lie_type, rank)
    out: Vector = {}
    done: set[Root] = set()
    for (i, j), v in x.entries().items():
        if not v:
            continue
        if i >= j:
            raise ValueError("only strictly upper-triangular elements are transported")
        root = where[(i, j)]
        if root in done:
            continue
        done.add(root)
        pos, unit = next(iter(mats[root].items()))
        coeff = Fraction(x[pos], unit) / c[root]
        if coeff.denominator != 1:
            raise ValueError("non-integral Chevalley coordinate")
        out[algebra.root_index(root)] = int(coeff)
    # membership check: the transported element must reproduce x entry by entry
    for root in done:
        m = mats[root]
        k = algebra.root_index(root)
        for pos, unit in m.items():
            if Fraction(out[k]) * c[root] * unit != x[pos]:
                raise ValueError("matrix is not in the algebra")
    return out
