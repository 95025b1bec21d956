"""Almost Hermitian structures (g, J, omega) on a Lie algebra.

A structure is a symmetric positive definite metric ``g`` together with an
endomorphism ``J`` squaring to minus the identity and compatible with ``g``
(``J^T g J = g``).  The fundamental 2-form is ``omega(X, Y) = g(JX, Y)``.

Frames: in exact (rational) arithmetic true orthonormalization would need
square roots, so unitary frames are kept g-orthogonal with the squared norm
of each frame vector tracked separately; every formula that consumes a frame
divides by those norms, which keeps all arithmetic inside the rational field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .algebra import LieAlgebra
from .scalars import (
    identity_matrix,
    is_spd,
    is_symmetric,
    is_zero,
    mat_inverse,
    mat_mul,
    mat_vec,
    rat,
    to_float,
    transpose,
    vec_dot,
    vec_is_zero,
    vec_scale,
    vec_sub,
)


class StructureError(ValueError):
    """Input fails to define an almost Hermitian structure."""


@dataclass(frozen=True)
class AlmostHermitianStructure:
    """Validated (g, J) pair with the derived fundamental form."""

    dim: int
    g: tuple
    J: tuple
    omega: tuple  # omega[i][j] = g(J e_i, e_j)

    @cached_property
    def g_inv(self) -> list:
        return mat_inverse([list(row) for row in self.g])

    def metric(self, x: Sequence, y: Sequence):
        return vec_dot(mat_vec([list(r) for r in self.g], list(y)), list(x))

    def apply_j(self, x: Sequence) -> list:
        return mat_vec([list(r) for r in self.J], list(x))

    def omega_value(self, x: Sequence, y: Sequence):
        return self.metric(self.apply_j(x), y)

    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for row in self.g for v in row)

    def to_float(self) -> "AlmostHermitianStructure":
        """Float copy with the metric rescaled to unit max entry.

        Every quantity the library reports (theta, Ricci forms, torsion
        types, class flags) is invariant under a positive rescaling of g,
        and working with a normalized metric keeps float residuals near
        machine precision instead of machine precision times the squared
        data magnitude.
        """
        scale = max(abs(to_float(x)) for row in self.g for x in row)
        conv_g = tuple(
            tuple(to_float(x) / scale for x in row) for row in self.g
        )
        conv = lambda m: tuple(tuple(to_float(x) for x in row) for row in m)
        return AlmostHermitianStructure(
            self.dim,
            conv_g,
            conv(self.J),
            tuple(tuple(to_float(x) / scale for x in row) for row in self.omega),
        )


def standard_j(dim: int) -> list:
    """The default pairing J e_{2k-1} = e_{2k}, J e_{2k} = -e_{2k-1}."""
    if dim % 2:
        raise StructureError("odd dimension %d admits no almost complex structure"
                             % dim)
    j = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        j[k + 1][k] = 1
        j[k][k + 1] = -1
    return j


def validate_structure(
    algebra_or_dim, g: Sequence, j: Sequence, eps: float | None = None
) -> AlmostHermitianStructure:
    """Check all structure invariants and bundle (g, J, omega)."""
    dim = (
        algebra_or_dim.dim
        if isinstance(algebra_or_dim, LieAlgebra)
        else int(algebra_or_dim)
    )
    if dim % 2:
        raise StructureError("odd dimension %d" % dim)
    if len(g) != dim or any(len(row) != dim for row in g):
        raise StructureError("metric must be %dx%d" % (dim, dim))
    if len(j) != dim or any(len(row) != dim for row in j):
        raise StructureError("J must be %dx%d" % (dim, dim))
    g = [list(row) for row in g]
    j = [list(row) for row in j]
    if not is_symmetric(g, eps):
        raise StructureError("metric is not symmetric")
    if not is_spd(g, eps):
        raise StructureError("metric not positive definite")
    jj = mat_mul(j, j)
    for a in range(dim):
        for b in range(dim):
            want = -1 if a == b else 0
            if not is_zero(jj[a][b] - want, eps):
                raise StructureError(
                    "J^2 != -Id at entry (%d, %d): got %s" % (a + 1, b + 1, jj[a][b])
                )
    jgj = mat_mul(transpose(j), mat_mul(g, j))
    for a in range(dim):
        for b in range(dim):
            if not is_zero(jgj[a][b] - g[a][b], eps):
                raise StructureError(
                    "g(J., J.) != g(., .) at entry (%d, %d)" % (a + 1, b + 1)
                )
    omega = mat_mul(transpose(j), g)
    for a in range(dim):
        for b in range(a + 1):
            if not is_zero(omega[a][b] + omega[b][a], eps):
                raise StructureError("fundamental form failed antisymmetry")
    freeze = lambda m: tuple(tuple(row) for row in m)
    return AlmostHermitianStructure(dim, freeze(g), freeze(j), freeze(omega))


# ---------------------------------------------------------------------------
# unitary frames


@dataclass(frozen=True)
class UnitaryFrame:
    """g-orthogonal frame u_1, Ju_1, ..., u_m, Ju_m with tracked norms.

    ``norms[r]`` is g(u_r, u_r) = g(Ju_r, Ju_r); the complex frame vectors
    (u_r - i Ju_r) / sqrt(2 norms[r]) are unitary, and all consumers divide
    by ``norms`` instead of normalizing.
    """

    vectors: tuple  # u_r
    jvectors: tuple  # J u_r
    norms: tuple  # g(u_r, u_r)

    def __len__(self) -> int:
        return len(self.vectors)


def unitary_frame(
    structure: AlmostHermitianStructure, seed: int | None = None
) -> UnitaryFrame:
    """Greedy J-adapted g-orthogonal frame.

    With ``seed=None`` candidates are the standard basis vectors in order
    (deterministic); otherwise seeded random integer vectors, which yields a
    genuinely different frame for frame-independence tests.
    """
    n = structure.dim
    exact = structure.is_exact()
    if seed is None:
        candidates = [
            [1 if i == k else 0 for i in range(n)] for k in range(n)
        ]
    else:
        rng = random.Random(seed)
        candidates = [
            [rng.randint(-3, 3) for _ in range(n)] for _ in range(2 * n)
        ]
        candidates += [[1 if i == k else 0 for i in range(n)] for k in range(n)]
    # keep the projection coefficients inside the scalar field (int / int
    # would silently produce floats)
    conv = (lambda x: rat(x)) if exact else float
    candidates = [[conv(x) for x in v] for v in candidates]
    us: list = []
    jus: list = []
    lams: list = []

    def project(v):
        v = list(v)
        for u, ju, lam in zip(us, jus, lams):
            coeff_u = structure.metric(v, u)
            coeff_ju = structure.metric(v, ju)
            v = vec_sub(v, vec_scale(coeff_u / lam, u))
            v = vec_sub(v, vec_scale(coeff_ju / lam, ju))
        return v

    if exact:
        # standard basis order with first-nonzero tie-breaking; unnormalized
        # vectors with tracked squared norms keep everything rational
        for cand in candidates:
            if len(us) == n // 2:
                break
            v = project(cand)
            if vec_is_zero(v):
                continue
            us.append(v)
            jus.append(structure.apply_j(v))
            lams.append(structure.metric(v, v))
    else:
        # float mode: pivot on the largest projected norm and normalize,
        # otherwise near-dependent candidates wreck the conditioning
        remaining = list(candidates)
        while len(us) < n // 2 and remaining:
            best = None
            best_lam = 0.0
            for cand in remaining:
                v = project(cand)
                lam = structure.metric(v, v)
                if lam > best_lam:
                    best, best_lam = (cand, v), lam
            if best is None or best_lam <= 0:
                break
            remaining.remove(best[0])
            v = vec_scale(1.0 / best_lam ** 0.5, best[1])
            us.append(v)
            jus.append(structure.apply_j(v))
            lams.append(structure.metric(v, v))
    if len(us) != n // 2:
        raise StructureError("failed to build a unitary frame")
    return UnitaryFrame(tuple(map(tuple, us)), tuple(map(tuple, jus)), tuple(lams))


# ---------------------------------------------------------------------------
# Nijenhuis tensor


def nijenhuis(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure,
    x: Sequence,
    y: Sequence,
) -> list:
    """N(X, Y) = [JX, JY] - [X, Y] - J([JX, Y] + [X, JY])."""
    jx = structure.apply_j(x)
    jy = structure.apply_j(y)
    term = vec_sub(algebra.bracket(jx, jy), algebra.bracket(x, y))
    mixed = [
        a + b
        for a, b in zip(algebra.bracket(jx, list(y)), algebra.bracket(list(x), jy))
    ]
    return vec_sub(term, structure.apply_j(mixed))


def nijenhuis_tensor(
    algebra: LieAlgebra, structure: AlmostHermitianStructure
) -> list:
    """Rank-3 table N[i][j] = components of N(e_i, e_j)."""
    n = algebra.dim
    basis = identity_matrix(n)
    return [
        [nijenhuis(algebra, structure, basis[i], basis[j]) for j in range(n)]
        for i in range(n)
    ]


# ---------------------------------------------------------------------------
# random structures


def random_compatible_structure(
    algebra_or_dim, seed: int, mode: str = "exact"
) -> AlmostHermitianStructure:
    """Deterministic random (g, J): J a rational conjugate of the standard
    pairing, g the J-average of a random integer SPD matrix.

    Conjugating by a product of unit-triangular integer matrices keeps J and
    its inverse exactly rational; averaging g0 over {Id, J} then restores
    compatibility without leaving the field.
    """
    dim = (
        algebra_or_dim.dim
        if isinstance(algebra_or_dim, LieAlgebra)
        else int(algebra_or_dim)
    )
    if dim % 2:
        raise StructureError("odd dimension %d" % dim)
    rng = random.Random(seed)
    lower = identity_matrix(dim)
    upper = identity_matrix(dim)
    # a few unit off-diagonal entries: dense unit-triangular factors have
    # exponentially large inverses, which would wreck float conditioning
    for _ in range(dim // 2 + 1):
        a, b = rng.randrange(dim), rng.randrange(dim)
        if a > b:
            lower[a][b] = rng.choice((-1, 1))
        elif a < b:
            upper[a][b] = rng.choice((-1, 1))
    p = mat_mul(lower, upper)
    p_inv = mat_mul(mat_inverse(upper), mat_inverse(lower))
    j = mat_mul(p, mat_mul(standard_j(dim), p_inv))
    a = [[rng.randint(-1, 1) for _ in range(dim)] for _ in range(dim)]
    g0 = mat_mul(transpose(a), a)
    for i in range(dim):
        g0[i][i] = g0[i][i] + 1 + rng.randint(0, 2)
    jgj = mat_mul(transpose(j), mat_mul(g0, j))
    g = [
        [rat(1, 2) * (g0[r][s] + jgj[r][s]) for s in range(dim)]
        for r in range(dim)
    ]
    structure = validate_structure(dim, g, j)
    if mode == "float":
        return structure.to_float()
    return structure
