"""Levi-Civita and the one-parameter family of canonical Hermitian connections.

A connection is the table Gamma[i][j] = components of nabla_{e_i} e_j.  The
Levi-Civita connection of a left-invariant metric comes from the Koszul
formula without derivative terms,

    2 g(D_X Y, Z) = g([X,Y], Z) - g([Y,Z], X) + g([Z,X], Y),

and the canonical family nabla^t adds torsion terms built from (d^c omega)
split into its (2,1)+(1,2) and (3,0)+(0,3) parts and from the Nijenhuis
tensor:

    g(nabla^t_X Y, Z) = g(D_X Y, Z)
                        + (t-1)/4 (d^c omega)^+(X, Y, Z)
                        + (t+1)/4 (d^c omega)^+(X, JY, JZ)
                        + NIJENHUIS_TERM_COEFF * g(X, N(Y, Z))
                        + 1/2 (d^c omega)^-(X, Y, Z)

with N(X, Y) = [JX, JY] - [X, Y] - J([JX, Y] + [X, JY]).

NIJENHUIS_TERM_COEFF is calibrated once against the gates nabla g = 0,
nabla J = 0, the independent construction of the t=0 connection as the
projection (D - J D J.)/2, and the torsion-type characterizations (t=1: no
(1,1) torsion; t=0: no (2,0) torsion and no (1,1) Bianchi part), then
frozen.  With the unnormalized N above the calibrated value is -1/4: the
residual (projection - assembly without the N term) equals -g(X, N(Y,Z))/4
entrywise on non-integrable test structures, and coefficients -1 or +1 fail
the nabla J = 0 gate outright.

Along the family the (1,1) part of the printed Bianchi-type projection of
the torsion equals -(t/2) [(d^c omega)^+]^(1,1) exactly; it vanishes for
every t only on quasi-Kahler structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LieAlgebra
from .calculus import (
    VectorValued2Form,
    bc_split,
    dc_operator,
    dense3,
    omega_form,
    plus_minus_split,
    type_split_vv,
)
from .scalars import (
    is_zero,
    mat_mul,
    mat_vec,
    rat,
    transpose,
    vec_sub,
    vec_zero,
)
from .structures import AlmostHermitianStructure, UnitaryFrame, nijenhuis_tensor

# Coefficient of the g(X, N(Y, Z)) term; see the module docstring for the
# calibration that froze it.
NIJENHUIS_TERM_COEFF_EXACT = rat(-1, 4)
NIJENHUIS_TERM_COEFF = -0.25


@dataclass(frozen=True)
class Connection:
    """Connection table: gamma[i][j] = components of nabla_{e_i} e_j."""

    dim: int
    gamma: tuple
    label: str = ""

    def derivative_matrix(self, i: int) -> list:
        """Matrix A_i with A_i v = nabla_{e_i} v for constant v."""
        n = self.dim
        return [[self.gamma[i][j][k] for j in range(n)] for k in range(n)]

    def apply(self, x: Sequence, y: Sequence) -> list:
        """nabla_X Y for constant component vectors."""
        n = self.dim
        out = vec_zero(n)
        for i in range(n):
            xi = x[i]
            if is_zero(xi) and not isinstance(xi, float):
                continue
            for j in range(n):
                yj = y[j]
                if is_zero(yj) and not isinstance(yj, float):
                    continue
                coeff = xi * yj
                comp = self.gamma[i][j]
                for k in range(n):
                    if not comp[k] == 0:
                        out[k] = out[k] + coeff * comp[k]
        return out

    def is_exact(self) -> bool:
        return not any(
            isinstance(x, float) for row in self.gamma for v in row for x in v
        )


def _freeze(gamma: list) -> tuple:
    return tuple(tuple(tuple(v) for v in row) for row in gamma)


def _koszul_lowered(algebra: LieAlgebra, structure: AlmostHermitianStructure):
    """K[i][j][l] = g(D_{e_i} e_j, e_l) by the Koszul formula."""
    n = algebra.dim
    g = [list(r) for r in structure.g]
    gb = [
        [mat_vec(g, algebra.bracket_basis(i, j)) for j in range(n)]
        for i in range(n)
    ]
    exact = not any(isinstance(x, float) for row in gb for v in row for x in v)
    half = rat(1, 2) if exact else 0.5
    return [
        [
            [
                half * (gb[i][j][l] - gb[j][l][i] + gb[l][i][j])
                for l in range(n)
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]


def _raise_lowered(structure: AlmostHermitianStructure, lowered) -> tuple:
    n = structure.dim
    ginv = structure.g_inv
    return _freeze(
        [[mat_vec(ginv, lowered[i][j]) for j in range(n)] for i in range(n)]
    )


def levi_civita(
    algebra: LieAlgebra, structure: AlmostHermitianStructure
) -> Connection:
    lowered = _koszul_lowered(algebra, structure)
    return Connection(
        algebra.dim, _raise_lowered(structure, lowered), "levi-civita"
    )


def _coerce_t(structure: AlmostHermitianStructure, t):
    if structure.is_exact():
        if isinstance(t, float):
            raise TypeError("exact structures need an exact parameter t; "
                            "pass an int, Fraction or 'p/q' string")
        return rat(t) if isinstance(t, (int, str)) else t
    return float(t)


class CanonicalFamily:
    """Shared t-independent data of the canonical connection family.

    The lowered connection is affine in t, so one assembly of the Koszul
    tensor, the split d^c omega and the Nijenhuis term serves every t.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        structure: AlmostHermitianStructure,
        frame: UnitaryFrame | None = None,
    ):
        n = algebra.dim
        self.algebra = algebra
        self.structure = structure
        self.exact = structure.is_exact()
        quarter = rat(1, 4) if self.exact else 0.25
        half = rat(1, 2) if self.exact else 0.5
        koszul = _koszul_lowered(algebra, structure)
        if n == 2:
            # omega is top-degree, so d^c omega lives in the zero space
            # Lambda^3(R^2) and the family degenerates to the projection
            # of the Levi-Civita connection
            zero3 = [[[0] * n for _ in range(n)] for _ in range(n)]
            plus, minus = zero3, zero3
        else:
            c_form = dc_operator(algebra, structure, omega_form(structure))
            c_plus, c_minus = plus_minus_split(structure, c_form, frame)
            plus = dense3(c_plus)
            minus = dense3(c_minus)
        j = [list(r) for r in structure.J]
        jt = transpose(j)
        # plus_jj[i][j][l] = (d^c omega)^+(e_i, J e_j, J e_l)
        plus_jj = [mat_mul(jt, mat_mul(plus[i], j)) for i in range(n)]
        g = [list(r) for r in structure.g]
        nij = nijenhuis_tensor(algebra, structure)
        gn = [[mat_vec(g, nij[a][b]) for b in range(n)] for a in range(n)]
        cn = NIJENHUIS_TERM_COEFF_EXACT if self.exact else NIJENHUIS_TERM_COEFF
        # lowered Gamma^t = base + t * slope
        self.base = [
            [
                [
                    koszul[i][jdx][l]
                    - quarter * (plus[i][jdx][l] - plus_jj[i][jdx][l])
                    + cn * gn[jdx][l][i]
                    + half * minus[i][jdx][l]
                    for l in range(n)
                ]
                for jdx in range(n)
            ]
            for i in range(n)
        ]
        self.slope = [
            [
                [
                    quarter * (plus[i][jdx][l] + plus_jj[i][jdx][l])
                    for l in range(n)
                ]
                for jdx in range(n)
            ]
            for i in range(n)
        ]
        self._ginv = structure.g_inv

    def connection(self, t) -> Connection:
        n = self.algebra.dim
        t = _coerce_t(self.structure, t)
        lowered = [
            [
                [
                    self.base[i][j][l] + t * self.slope[i][j][l]
                    for l in range(n)
                ]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return Connection(
            n, _raise_lowered(self.structure, lowered), "canonical t=%s" % (t,)
        )


def canonical_connection(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure,
    t,
    frame: UnitaryFrame | None = None,
) -> Connection:
    """The canonical Hermitian connection with parameter t (t=1 Chern,
    t=0 first canonical, t=-1 Bismut for integrable J)."""
    return CanonicalFamily(algebra, structure, frame).connection(t)


def canonical_connection_integrable(
    algebra: LieAlgebra, structure: AlmostHermitianStructure, t
) -> Connection:
    """Reduced assembly valid when J is integrable: no Nijenhuis term and no
    type splitting of d^c omega."""
    n = algebra.dim
    t = _coerce_t(structure, t)
    exact = structure.is_exact()
    quarter = rat(1, 4) if exact else 0.25
    lowered = _koszul_lowered(algebra, structure)
    if n == 2:
        c_dense = [[[0] * n for _ in range(n)] for _ in range(n)]
    else:
        c_dense = dense3(dc_operator(algebra, structure, omega_form(structure)))
    j = [list(r) for r in structure.J]
    jt = transpose(j)
    c_jj = [mat_mul(jt, mat_mul(c_dense[i], j)) for i in range(n)]
    ca = quarter * (t - 1)
    cb = quarter * (t + 1)
    for i in range(n):
        for jdx in range(n):
            row = lowered[i][jdx]
            for l in range(n):
                row[l] = row[l] + ca * c_dense[i][jdx][l] + cb * c_jj[i][jdx][l]
    return Connection(
        n, _raise_lowered(structure, lowered), "canonical-integrable t=%s" % (t,)
    )


def first_canonical_by_projection(
    algebra: LieAlgebra, structure: AlmostHermitianStructure
) -> Connection:
    """Independent construction of the t=0 connection:
    nabla_X Y = (D_X Y - J D_X (J Y)) / 2."""
    n = algebra.dim
    d_conn = levi_civita(algebra, structure)
    j = [list(r) for r in structure.J]
    exact = structure.is_exact()
    half = rat(1, 2) if exact else 0.5
    gamma = []
    for i in range(n):
        a_i = d_conn.derivative_matrix(i)
        corrected = mat_mul(j, mat_mul(a_i, j))
        gamma.append(
            [
                [
                    half * (a_i[k][jdx] - corrected[k][jdx])
                    for k in range(n)
                ]
                for jdx in range(n)
            ]
        )
    return Connection(n, _freeze(gamma), "first-canonical-projection")


def torsion(algebra: LieAlgebra, connection: Connection) -> VectorValued2Form:
    """T(X, Y) = nabla_X Y - nabla_Y X - [X, Y]."""
    n = algebra.dim
    comp = [
        [
            vec_sub(
                vec_sub(list(connection.gamma[i][j]), list(connection.gamma[j][i])),
                algebra.bracket_basis(i, j),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    return VectorValued2Form(n, comp)


def hermitian_check(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure,
    connection: Connection,
) -> dict:
    """Max-norms of nabla g and nabla J over basis entries."""
    n = algebra.dim
    g = [list(r) for r in structure.g]
    j = [list(r) for r in structure.J]
    grad_g = 0
    grad_j = 0
    for i in range(n):
        a_i = connection.derivative_matrix(i)
        ga = mat_mul(g, a_i)  # ga[l][j] = g(nabla_i e_j, e_l)
        for jdx in range(n):
            for l in range(jdx, n):
                val = abs(ga[l][jdx] + ga[jdx][l])
                if val > grad_g:
                    grad_g = val
        comm = mat_mul(a_i, j)
        jcomm = mat_mul(j, a_i)
        for k in range(n):
            for jdx in range(n):
                val = abs(comm[k][jdx] - jcomm[k][jdx])
                if val > grad_j:
                    grad_j = val
    return {"grad_g_norm": grad_g, "grad_J_norm": grad_j}


def torsion_type_report(
    structure: AlmostHermitianStructure, t_form: VectorValued2Form
) -> dict:
    """Max-norms of the torsion type components and the skew-symmetry defect."""
    t20, t11, t02 = type_split_vv(structure, t_form)
    t_b, _ = bc_split(structure, t_form)
    tb20, tb11, tb02 = type_split_vv(structure, t_b)
    n = structure.dim
    g = [list(r) for r in structure.g]
    lowered = [[mat_vec(g, t_form.comp[i][j]) for j in range(n)] for i in range(n)]
    skew = 0
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                val = abs(lowered[i][j][k] + lowered[i][k][j])
                if val > skew:
                    skew = val
    return {
        "norm_T20": t20.max_abs(),
        "norm_T11": t11.max_abs(),
        "norm_T02": t02.max_abs(),
        "norm_T11_b": tb11.max_abs(),
        "skew_defect": skew,
    }
