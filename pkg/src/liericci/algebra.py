"""Finite-dimensional real Lie algebras given by structure constants.

The structure tensor is stored as ``c[i][j][k]`` = coefficient of ``e_k`` in
``[e_i, e_j]`` (0-based indices).  Construction validates antisymmetry and the
Jacobi identity; everything downstream may assume both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalars import (
    exact_from_float,
    is_zero,
    nullspace,
    rat,
    row_echelon,
    vec_is_zero,
    vec_max_abs,
    vec_zero,
)


class JacobiError(ValueError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, defect, triple=None):
        self.defect = defect
        self.triple = triple
        where = "" if triple is None else " at basis triple %s" % (triple,)
        super().__init__(
            "Jacobi identity fails%s (max cyclic-sum entry %s)" % (where, defect)
        )


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra of dimension ``dim`` with bracket table ``c``."""

    dim: int
    c: tuple  # c[i][j] = tuple of components of [e_i, e_j]

    @staticmethod
    def from_structure_constants(
        dim: int, c: Sequence, eps: float | None = None, validate: bool = True
    ) -> "LieAlgebra":
        """Build and validate an algebra from a dense rank-3 coefficient array."""
        if dim <= 0:
            raise ValueError("dimension must be positive")
        table = tuple(
            tuple(tuple(c[i][j][k] for k in range(dim)) for j in range(dim))
            for i in range(dim)
        )
        alg = LieAlgebra(dim, table)
        if validate:
            for i in range(dim):
                for j in range(i + 1):
                    for k in range(dim):
                        if not is_zero(table[i][j][k] + table[j][i][k], eps):
                            raise ValueError(
                                "structure constants not antisymmetric at "
                                "(%d, %d, %d)" % (i + 1, j + 1, k + 1)
                            )
            defect, triple = alg._jacobi_worst(eps)
            if not is_zero(defect, eps):
                raise JacobiError(defect, triple)
        return alg

    @staticmethod
    def abelian(dim: int) -> "LieAlgebra":
        zero = tuple(tuple(tuple(0 for _ in range(dim)) for _ in range(dim))
                     for _ in range(dim))
        return LieAlgebra(dim, zero)

    # -- bracket and adjoint ------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> list:
        """[e_i, e_j] as a component list."""
        return list(self.c[i][j])

    def bracket(self, x: Sequence, y: Sequence) -> list:
        """[X, Y] for component vectors X, Y."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("vector length does not match algebra dimension")
        out = vec_zero(n)
        for i in range(n):
            xi = x[i]
            if is_zero(xi):
                continue
            row = self.c[i]
            for j in range(n):
                yj = y[j]
                if is_zero(yj):
                    continue
                coeff = xi * yj
                cij = row[j]
                for k in range(n):
                    if cij[k] != 0:
                        out[k] = out[k] + coeff * cij[k]
        return out

    def ad_matrix(self, x: Sequence) -> list:
        """Matrix of ad_X = [X, .] in the fixed basis (columns are [X, e_j])."""
        n = self.dim
        m = [vec_zero(n) for _ in range(n)]
        for i in range(n):
            xi = x[i]
            if is_zero(xi):
                continue
            for j in range(n):
                cij = self.c[i][j]
                for k in range(n):
                    if cij[k] != 0:
                        m[k][j] = m[k][j] + xi * cij[k]
        return m

    def ad_basis(self, i: int) -> list:
        n = self.dim
        return [[self.c[i][j][k] for j in range(n)] for k in range(n)]

    def trace_ad_basis(self, i: int):
        return sum(self.c[i][k][k] for k in range(self.dim))

    # -- validation helpers ---------------------------------------------------

    def _jacobi_worst(self, eps: float | None = None):
        n = self.dim
        worst = 0
        worst_triple = None
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    s = self.bracket(bij, self._basis(k))
                    s = [a + b for a, b in zip(
                        s, self.bracket(self.bracket_basis(j, k), self._basis(i)))]
                    s = [a + b for a, b in zip(
                        s, self.bracket(self.bracket_basis(k, i), self._basis(j)))]
                    m = vec_max_abs(s)
                    if m > worst:
                        worst, worst_triple = m, (i + 1, j + 1, k + 1)
        return worst, worst_triple

    def jacobi_defect(self):
        """Max-abs entry of the cyclic sum [[e_i,e_j],e_k] + cyc over triples."""
        return self._jacobi_worst()[0]

    def _basis(self, i: int) -> list:
        v = vec_zero(self.dim)
        v[i] = 1
        return v

    # -- global invariants ----------------------------------------------------

    def is_unimodular(self, eps: float | None = None) -> bool:
        return all(is_zero(self.trace_ad_basis(i), eps) for i in range(self.dim))

    def lower_central_series(self, eps: float | None = None) -> list[int]:
        """Dimensions of g >= [g,g] >= [g,[g,g]] >= ... down to stabilization."""
        n = self.dim
        dims = [n]
        current = [self._basis(i) for i in range(n)]
        while True:
            produced = []
            for i in range(n):
                for v in current:
                    w = self.bracket(self._basis(i), v)
                    if not vec_is_zero(w, eps):
                        produced.append(w)
            basis = row_echelon(produced, eps) if produced else []
            dims.append(len(basis))
            if len(basis) == dims[-2] or not basis:
                break
            current = basis
        return dims

    def nilpotency_step(self, eps: float | None = None) -> int | None:
        """k for a k-step nilpotent algebra, None if not nilpotent."""
        dims = self.lower_central_series(eps)
        if dims[-1] != 0:
            return None
        return len(dims) - 1

    def derived_algebra(self, eps: float | None = None) -> list:
        """Row-reduced basis of [g, g]."""
        vecs = [
            self.bracket_basis(i, j)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        vecs = [v for v in vecs if not vec_is_zero(v, eps)]
        return row_echelon(vecs, eps) if vecs else []

    def center(self, eps: float | None = None) -> list:
        """Row-reduced basis of {z : [z, g] = 0} (kernel of all ad maps)."""
        n = self.dim
        rows = []
        for j in range(n):
            for k in range(n):
                row = [self.c[i][j][k] for i in range(n)]
                if not vec_is_zero(row, eps):
                    rows.append(row)
        if not rows:
            return [self._basis(i) for i in range(n)]
        return nullspace(rows, eps)

    def is_abelian(self, eps: float | None = None) -> bool:
        return all(
            vec_is_zero(self.bracket_basis(i, j), eps)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_two_step(self, eps: float | None = None) -> bool:
        """Non-abelian with [g,g] contained in the center."""
        if self.is_abelian(eps):
            return False
        for v in self.derived_algebra(eps):
            flat = [x for row in self.ad_matrix(v) for x in row]
            if not vec_is_zero(flat, eps):
                return False
        return True

    # -- conversions ----------------------------------------------------------

    def to_float(self) -> "LieAlgebra":
        c = tuple(
            tuple(tuple(float(x) for x in col) for col in row) for row in self.c
        )
        return LieAlgebra(self.dim, c)

    def is_exact(self) -> bool:
        return not any(
            isinstance(x, float) for row in self.c for col in row for x in col
        )

    def to_exact(self) -> "LieAlgebra":
        conv = lambda x: exact_from_float(x) if isinstance(x, float) else rat(x)
        c = tuple(
            tuple(tuple(conv(x) for x in col) for col in row) for row in self.c
        )
        return LieAlgebra(self.dim, c)
