"""Structure-class predicates for almost Hermitian Lie algebras.

Each flag is an exact tensor identity (epsilon-thresholded in float mode):

  integrable          N = 0
  bi_invariant        [J., .] = J [., .]
  anti_bi_invariant   [J., .] = -J [., .]
  abelian_J           [J., J.] = [., .]
  anti_abelian_J      [J., J.] = -[., .]
  almost_kahler       d omega = 0
  quasi_kahler        (d omega)^+ = 0   (the (2,1)+(1,2) part vanishes)
  cosymplectic        delta omega = 0   (Riemannian codifferential)
  kahler              integrable and almost_kahler
"""

from __future__ import annotations

from .algebra import LieAlgebra
from .calculus import (
    ce_differential,
    codifferential,
    omega_form,
    plus_minus_split,
)
from .scalars import mat_vec, vec_is_zero, vec_sub
from .structures import AlmostHermitianStructure, nijenhuis_tensor

CLASS_FLAG_NAMES = (
    "integrable",
    "bi_invariant",
    "anti_bi_invariant",
    "abelian_J",
    "anti_abelian_J",
    "quasi_kahler",
    "almost_kahler",
    "cosymplectic",
    "kahler",
)


def class_predicates(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure,
    eps: float | None = None,
) -> dict:
    n = algebra.dim
    j = [list(r) for r in structure.J]
    jcols = [[j[a][i] for a in range(n)] for i in range(n)]
    basis = [[1 if a == i else 0 for a in range(n)] for i in range(n)]

    integrable = all(
        vec_is_zero(v, eps) for row in nijenhuis_tensor(algebra, structure)
        for v in row
    )

    bi_inv = True
    anti_bi = True
    abelian = True
    anti_ab = True
    for a in range(n):
        for b in range(a + 1, n):
            br = algebra.bracket_basis(a, b)
            jbr = mat_vec(j, br)
            ja_b = algebra.bracket(jcols[a], basis[b])
            ja_jb = algebra.bracket(jcols[a], jcols[b])
            if bi_inv and not vec_is_zero(vec_sub(ja_b, jbr), eps):
                bi_inv = False
            if anti_bi and not vec_is_zero(
                [x + y for x, y in zip(ja_b, jbr)], eps
            ):
                anti_bi = False
            if abelian and not vec_is_zero(vec_sub(ja_jb, br), eps):
                abelian = False
            if anti_ab and not vec_is_zero(
                [x + y for x, y in zip(ja_jb, br)], eps
            ):
                anti_ab = False

    om = omega_form(structure)
    if n == 2:
        # omega is a top-degree form: d omega lives in Lambda^3(R^2) = 0
        almost_kahler = True
        quasi_kahler = True
    else:
        d_om = ce_differential(algebra, om)
        almost_kahler = d_om.is_zero_form(eps)
        if almost_kahler:
            quasi_kahler = True
        else:
            plus, _ = plus_minus_split(structure, d_om)
            quasi_kahler = plus.is_zero_form(eps)
    cosymplectic = codifferential(algebra, structure, om).is_zero_form(eps)

    return {
        "integrable": integrable,
        "bi_invariant": bi_inv,
        "anti_bi_invariant": anti_bi,
        "abelian_J": abelian,
        "anti_abelian_J": anti_ab,
        "quasi_kahler": quasi_kahler,
        "almost_kahler": almost_kahler,
        "cosymplectic": cosymplectic,
        "kahler": integrable and almost_kahler,
    }
