"""The Lie algebra spanned by a Chevalley basis, as sparse integer vectors.

Basis order: the simple coroots h_1..h_n first, then e_a for every root in
``RootSystem.roots`` order.
"""

from __future__ import annotations

from functools import lru_cache

from .roots import Root, RootSystem, add, build_root_system

Vector = dict[int, int]


class ChevalleyAlgebra:
    def __init__(self, system: RootSystem) -> None:
        self.system = system
        self.rank = system.rank
        self.dimension = system.dimension

    def root_index(self, a: Root) -> int:
        return self.rank + self.system.index[a]

    def basis_root(self, k: int) -> Root | None:
        return None if k < self.rank else self.system.roots[k - self.rank]

    def bracket_basis(self, i: int, j: int) -> Vector:
        sys_ = self.system
        a, b = self.basis_root(i), self.basis_root(j)
        if a is None and b is None:
            return {}
        if a is None:
            return {j: sys_.pairing(b, i)} if sys_.pairing(b, i) else {}
        if b is None:
            v = sys_.pairing(a, j)
            return {i: -v} if v else {}
        c = add(a, b)
        if not any(c):
            return {k: v for k, v in enumerate(sys_.coroot_coefficients(a)) if v}
        n = sys_.N(a, b)
        return {self.root_index(c): n} if n else {}

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for i, xi in x.items():
            if not xi:
                continue
            for j, yj in y.items():
                if not yj:
                    continue
                for k, v in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + xi * yj * v
        return {k: v for k, v in out.items() if v}

    def jacobi_defect(self, i: int, j: int, k: int) -> Vector:
        """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] for three basis vectors."""
        x, y, z = {i: 1}, {j: 1}, {k: 1}
        total: Vector = {}
        for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
            for key, val in self.bracket(u, self.bracket(v, w)).items():
                total[key] = total.get(key, 0) + val
        return {key: val for key, val in total.items() if val}


@lru_cache(maxsize=None)
def chevalley_algebra(lie_type: str, rank: int) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(build_root_system(lie_type, rank))
