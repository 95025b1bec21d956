"""Exterior calculus of left-invariant forms on a Lie algebra.

Forms are stored sparsely on strictly increasing index tuples.  The exterior
derivative is the Chevalley-Eilenberg one, fixed by the convention

    d(e^k)(e_i, e_j) = -e^k([e_i, e_j]),

so for a 1-form alpha:  d(alpha)(X, Y) = -alpha([X, Y]).  The inner product
on k-forms is induced by g with wedge products of orthonormal covectors
orthonormal (Gram determinant convention), and the codifferential is the
adjoint of d in that inner product, minus the interior product with the mean
curvature vector on non-unimodular algebras.

Complex quantities (type projections) are handled as pairs of real tensors;
the unitary frame enters only through rational combinations, so exact mode
never leaves the rational field.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .algebra import LieAlgebra
from .scalars import (
    is_zero,
    mat_vec,
    rat,
    solve_linear,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .structures import AlmostHermitianStructure, UnitaryFrame, unitary_frame


def _sort_with_sign(indices: Sequence[int]):
    """Sort an index tuple, returning (sign, sorted_tuple) or None on repeats."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return None
    return sign, tuple(idx)


class KForm:
    """Alternating k-form as a map {strictly increasing tuple -> coefficient}."""

    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim: int, degree: int, coeffs: dict | None = None):
        if degree < 0 or degree > dim:
            raise ValueError("degree %d out of range for dimension %d"
                             % (degree, dim))
        self.dim = dim
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for key, value in coeffs.items():
                if len(key) != degree:
                    raise ValueError("index tuple %s has wrong length" % (key,))
                if not is_zero(value) or isinstance(value, float):
                    srt = _sort_with_sign(key)
                    if srt is None:
                        raise ValueError("repeated index in %s" % (key,))
                    sign, skey = srt
                    self.coeffs[skey] = self.coeffs.get(skey, 0) + sign * value
        self.coeffs = {k: v for k, v in self.coeffs.items() if not v == 0}

    # -- ring-ish operations ------------------------------------------------

    def __add__(self, other: "KForm") -> "KForm":
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, 0) + value
        return KForm(self.dim, self.degree, coeffs)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + other.scale(-1)

    def scale(self, c) -> "KForm":
        return KForm(
            self.dim, self.degree, {k: c * v for k, v in self.coeffs.items()}
        )

    def __neg__(self) -> "KForm":
        return self.scale(-1)

    def _check_compatible(self, other: "KForm"):
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("form degree/dimension mismatch")

    # -- queries --------------------------------------------------------------

    def component(self, *indices: int):
        """Coefficient on e^{i_1} ^ ... (0-based indices, any order)."""
        srt = _sort_with_sign(indices)
        if srt is None:
            return 0
        sign, key = srt
        return sign * self.coeffs.get(key, 0)

    def evaluate(self, *vectors: Sequence):
        """Full multilinear evaluation on component vectors."""
        if len(vectors) != self.degree:
            raise ValueError("expected %d arguments" % self.degree)
        if self.degree == 0:
            return self.coeffs.get((), 0)
        total = 0
        for key, value in self.coeffs.items():
            sub = [[v[i] for i in key] for v in vectors]
            total = total + value * _det(sub)
        return total

    def is_zero_form(self, eps: float | None = None) -> bool:
        return all(is_zero(v, eps) for v in self.coeffs.values())

    def max_abs(self):
        return max((abs(v) for v in self.coeffs.values()), default=0)

    def equals(self, other: "KForm", eps: float | None = None) -> bool:
        self._check_compatible(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            is_zero(self.coeffs.get(k, 0) - other.coeffs.get(k, 0), eps)
            for k in keys
        )

    def to_float(self) -> "KForm":
        return KForm(
            self.dim, self.degree,
            {k: float(v) for k, v in self.coeffs.items()},
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "KForm(%d, deg=%d, 0)" % (self.dim, self.degree)
        body = " + ".join(
            "%s*e^%s" % (v, "".join(str(i + 1) for i in k))
            for k, v in sorted(self.coeffs.items())
        )
        return "KForm(%d, deg=%d, %s)" % (self.dim, self.degree, body)


def _det(m: list) -> object:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    total = 0
    for j in range(n):
        if is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def basis_covector(dim: int, i: int) -> KForm:
    return KForm(dim, 1, {(i,): 1})


def kform_from_matrix(m: Sequence) -> KForm:
    """2-form from an antisymmetric matrix of values on basis pairs."""
    n = len(m)
    return KForm(
        n, 2,
        {(i, j): m[i][j] for i in range(n) for j in range(i + 1, n)},
    )


def omega_form(structure: AlmostHermitianStructure) -> KForm:
    return kform_from_matrix(structure.omega)


# ---------------------------------------------------------------------------
# wedge, differential, inner product


def wedge(alpha: KForm, beta: KForm) -> KForm:
    if alpha.dim != beta.dim:
        raise ValueError("dimension mismatch")
    degree = alpha.degree + beta.degree
    if degree > alpha.dim:
        raise ValueError("wedge degree %d exceeds dimension" % degree)
    coeffs: dict = {}
    for ka, va in alpha.coeffs.items():
        for kb, vb in beta.coeffs.items():
            srt = _sort_with_sign(ka + kb)
            if srt is None:
                continue
            sign, key = srt
            coeffs[key] = coeffs.get(key, 0) + sign * va * vb
    return KForm(alpha.dim, degree, coeffs)


def omega_power(structure: AlmostHermitianStructure, k: int) -> KForm:
    om = omega_form(structure)
    out = KForm(structure.dim, 0, {(): 1})
    for _ in range(k):
        out = wedge(out, om)
    return out


def ce_differential(algebra: LieAlgebra, alpha: KForm) -> KForm:
    """Chevalley-Eilenberg exterior derivative."""
    n, k = alpha.dim, alpha.degree
    if n != algebra.dim:
        raise ValueError("form does not live on this algebra")
    if k == n:
        raise ValueError("cannot differentiate a top-degree form")
    coeffs: dict = {}
    for key in combinations(range(n), k + 1):
        total = 0
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                rest = key[:a] + key[a + 1:b] + key[b + 1:]
                bracket = algebra.c[key[a]][key[b]]
                for m_idx in range(n):
                    cm = bracket[m_idx]
                    if cm == 0:
                        continue
                    srt = _sort_with_sign((m_idx,) + rest)
                    if srt is None:
                        continue
                    sign, skey = srt
                    val = alpha.coeffs.get(skey)
                    if val is None:
                        continue
                    term = cm * val * sign
                    total = total + (-term if (a + b) % 2 else term)
        if not total == 0:
            coeffs[key] = total
    return KForm(n, k + 1, coeffs)


def flat(structure: AlmostHermitianStructure, x: Sequence) -> KForm:
    """The 1-form X^nat = g(X, .)."""
    gx = mat_vec([list(r) for r in structure.g], list(x))
    return KForm(structure.dim, 1, {(i,): gx[i] for i in range(structure.dim)})


def sharp(structure: AlmostHermitianStructure, alpha: KForm) -> list:
    """Inverse of flat on 1-forms."""
    if alpha.degree != 1:
        raise ValueError("sharp expects a 1-form")
    vec = [alpha.coeffs.get((i,), 0) for i in range(structure.dim)]
    return mat_vec(structure.g_inv, vec)


def form_inner_product(
    structure: AlmostHermitianStructure, alpha: KForm, beta: KForm
):
    """<alpha, beta> with Gram-determinant normalization on k-forms."""
    alpha._check_compatible(beta)
    if alpha.degree == 0:
        return alpha.coeffs.get((), 0) * beta.coeffs.get((), 0)
    ginv = structure.g_inv
    total = 0
    for ka, va in alpha.coeffs.items():
        for kb, vb in beta.coeffs.items():
            gram = [[ginv[a][b] for b in kb] for a in ka]
            total = total + va * vb * _det(gram)
    return total


def interior_product(v: Sequence, alpha: KForm) -> KForm:
    """Contraction of the first slot with a vector."""
    if alpha.degree == 0:
        raise ValueError("cannot contract a 0-form")
    coeffs: dict = {}
    for key, value in alpha.coeffs.items():
        for pos, idx in enumerate(key):
            vi = v[idx]
            if is_zero(vi) and not isinstance(vi, float):
                continue
            rest = key[:pos] + key[pos + 1:]
            sign = 1 if pos % 2 == 0 else -1
            coeffs[rest] = coeffs.get(rest, 0) + sign * vi * value
    return KForm(alpha.dim, alpha.degree - 1, coeffs)


def mean_curvature_vector(
    algebra: LieAlgebra, structure: AlmostHermitianStructure
) -> list:
    """H with g(H, X) = tr ad_X; zero exactly on unimodular algebras."""
    tau = [algebra.trace_ad_basis(i) for i in range(algebra.dim)]
    return mat_vec(structure.g_inv, tau)


def adjoint_codifferential(
    algebra: LieAlgebra, structure: AlmostHermitianStructure, alpha: KForm
) -> KForm:
    """The adjoint of ce_differential: <d* alpha, beta> = <alpha, d beta>."""
    k = alpha.degree
    if k == 0:
        raise ValueError("codifferential of a 0-form")
    n = alpha.dim
    keys = list(combinations(range(n), k - 1))
    basis = [KForm(n, k - 1, {key: 1}) for key in keys]
    rhs = [
        form_inner_product(structure, alpha, ce_differential(algebra, b))
        for b in basis
    ]
    gram = [
        [form_inner_product(structure, bi, bj) for bj in basis] for bi in basis
    ]
    sol = solve_linear(gram, rhs)
    return KForm(n, k - 1, {key: sol[i] for i, key in enumerate(keys)})


def codifferential(
    algebra: LieAlgebra, structure: AlmostHermitianStructure, alpha: KForm
) -> KForm:
    """Riemannian codifferential of an invariant form.

    Equals the plain adjoint of d on unimodular algebras; otherwise carries
    the mean-curvature correction  delta = d*_alg - i_H.
    """
    out = adjoint_codifferential(algebra, structure, alpha)
    h = mean_curvature_vector(algebra, structure)
    if not vec_is_zero(h):
        out = out - interior_product(h, alpha)
    return out


# ---------------------------------------------------------------------------
# J action, d^c and type decompositions


def j_pullback(structure: AlmostHermitianStructure, alpha: KForm) -> KForm:
    """alpha(J., ..., J.) as a coefficient transform."""
    n, k = alpha.dim, alpha.degree
    if k == 0:
        return alpha
    j = structure.J
    coeffs: dict = {}
    for target in combinations(range(n), k):
        total = 0
        for key, value in alpha.coeffs.items():
            sub = [[j[a][b] for b in target] for a in key]
            total = total + value * _det(sub)
        if not total == 0:
            coeffs[target] = total
    return KForm(n, k, coeffs)


def j_on_forms(structure: AlmostHermitianStructure, alpha: KForm) -> KForm:
    """J alpha = (-1)^r alpha(J., ..., J.) on r-forms."""
    pulled = j_pullback(structure, alpha)
    return pulled if alpha.degree % 2 == 0 else pulled.scale(-1)


def dc_operator(
    algebra: LieAlgebra, structure: AlmostHermitianStructure, alpha: KForm
) -> KForm:
    """d^c = (-1)^r J d J on r-forms."""
    inner = j_on_forms(structure, alpha)
    outer = j_on_forms(structure, ce_differential(algebra, inner))
    return outer if alpha.degree % 2 == 0 else outer.scale(-1)


def _complex_coframe(structure: AlmostHermitianStructure, frame: UnitaryFrame):
    """1-forms eta^r = (u_r^nat + i (Ju_r)^nat) / (2 lambda_r), as (re, im)."""
    out = []
    for u, ju, lam in zip(frame.vectors, frame.jvectors, frame.norms):
        scale = 1 / (2 * lam)
        re = flat(structure, u).scale(scale)
        im = flat(structure, ju).scale(scale)
        out.append((re, im))
    return out


def _complex_eval3(gamma: KForm, triple):
    """gamma(W_r, W_s, W_t) for W = u - i Ju, returned as (re, im)."""
    re_total = 0
    im_total = 0
    for bits in range(8):
        vecs = []
        ipow = 0
        for pos in range(3):
            u, ju = triple[pos]
            if bits >> pos & 1:
                vecs.append(ju)  # imaginary part of W is -Ju
                ipow += 1
            else:
                vecs.append(u)
        val = gamma.evaluate(*vecs)
        # each imaginary slot contributes a factor (-i)
        if ipow % 4 == 0:
            re_total = re_total + val
        elif ipow % 4 == 1:
            im_total = im_total - val
        elif ipow % 4 == 2:
            re_total = re_total - val
        else:
            im_total = im_total + val
    return re_total, im_total


def plus_minus_split(
    structure: AlmostHermitianStructure,
    gamma: KForm,
    frame: UnitaryFrame | None = None,
) -> tuple[KForm, KForm]:
    """Split a 3-form into ((2,1)+(1,2), (3,0)+(0,3)) parts via a unitary frame.

    The (3,0) components are read off against the complex frame W_r = u_r -
    i J u_r; the minus part is twice the real part of their span, and the
    plus part is the remainder.  Both returned forms are real.
    """
    if gamma.degree != 3:
        raise ValueError("plus/minus split applies to 3-forms")
    if frame is None:
        frame = unitary_frame(structure)
    m = len(frame)
    minus = KForm(gamma.dim, 3)
    if m >= 3 and not gamma.is_zero_form():
        coframe = _complex_coframe(structure, frame)
        pairs = list(zip(frame.vectors, frame.jvectors))
        for r, s, t in combinations(range(m), 3):
            c_re, c_im = _complex_eval3(gamma, (pairs[r], pairs[s], pairs[t]))
            if is_zero(c_re) and is_zero(c_im):
                continue
            # eta^r ^ eta^s ^ eta^t, expanded into real and imaginary parts
            (ar, br), (as_, bs), (at, bt) = coframe[r], coframe[s], coframe[t]
            re_w = (
                wedge(ar, wedge(as_, at))
                - wedge(ar, wedge(bs, bt))
                - wedge(br, wedge(as_, bt))
                - wedge(br, wedge(bs, at))
            )
            im_w = (
                wedge(ar, wedge(as_, bt))
                + wedge(ar, wedge(bs, at))
                + wedge(br, wedge(as_, at))
                - wedge(br, wedge(bs, bt))
            )
            # 2 Re(c * eta^{rst})
            minus = minus + re_w.scale(2 * c_re) - im_w.scale(2 * c_im)
    plus = gamma - minus
    return plus, minus


# ---------------------------------------------------------------------------
# vector-valued 2-forms


class VectorValued2Form:
    """B(X, Y) antisymmetric in (X, Y), with values in the algebra."""

    __slots__ = ("dim", "comp")

    def __init__(self, dim: int, comp: list):
        self.dim = dim
        self.comp = comp  # comp[i][j] = components of B(e_i, e_j)

    @staticmethod
    def zero(dim: int) -> "VectorValued2Form":
        return VectorValued2Form(
            dim, [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        )

    def value(self, x: Sequence, y: Sequence) -> list:
        out = vec_zero(self.dim)
        for i in range(self.dim):
            xi = x[i]
            if is_zero(xi) and not isinstance(xi, float):
                continue
            for j in range(self.dim):
                yj = y[j]
                if is_zero(yj) and not isinstance(yj, float):
                    continue
                coeff = xi * yj
                comp = self.comp[i][j]
                for k in range(self.dim):
                    if not comp[k] == 0:
                        out[k] = out[k] + coeff * comp[k]
        return out

    def __add__(self, other: "VectorValued2Form") -> "VectorValued2Form":
        return VectorValued2Form(
            self.dim,
            [
                [
                    [a + b for a, b in zip(self.comp[i][j], other.comp[i][j])]
                    for j in range(self.dim)
                ]
                for i in range(self.dim)
            ],
        )

    def __sub__(self, other: "VectorValued2Form") -> "VectorValued2Form":
        return self + other.scale(-1)

    def scale(self, c) -> "VectorValued2Form":
        return VectorValued2Form(
            self.dim,
            [
                [vec_scale(c, self.comp[i][j]) for j in range(self.dim)]
                for i in range(self.dim)
            ],
        )

    def max_abs(self):
        return max(
            (
                abs(x)
                for row in self.comp
                for vec in row
                for x in vec
            ),
            default=0,
        )

    def is_zero_tensor(self, eps: float | None = None) -> bool:
        return all(
            is_zero(x, eps) for row in self.comp for vec in row for x in vec
        )


def type_split_vv(
    structure: AlmostHermitianStructure, b: VectorValued2Form
) -> tuple[VectorValued2Form, VectorValued2Form, VectorValued2Form]:
    """Decompose B into (B20, B11, B02) under the J commutation types.

    B11(X,Y) = (B(X,Y) + B(JX,JY)) / 2 and the remainder splits by whether
    B(JX, .) equals +J B(X, .) (the (2,0) part) or -J B(X, .) (the (0,2)
    part).
    """
    n = structure.dim
    j = [list(r) for r in structure.J]
    jcols = [[j[a][i] for a in range(n)] for i in range(n)]  # components of J e_i
    basis = [[1 if t == i else 0 for t in range(n)] for i in range(n)]
    is_float = _vv_has_float(b)
    half = 0.5 if is_float else rat(1, 2)
    quarter = 0.25 if is_float else rat(1, 4)
    b20 = VectorValued2Form.zero(n)
    b11 = VectorValued2Form.zero(n)
    b02 = VectorValued2Form.zero(n)
    for i in range(n):
        for k in range(i + 1, n):
            base = b.comp[i][k]
            jj = b.value(jcols[i], jcols[k])
            jx = mat_vec(j, b.value(jcols[i], basis[k]))
            xj = mat_vec(j, b.value(basis[i], jcols[k]))
            v11 = [half * (p + q) for p, q in zip(base, jj)]
            diff = vec_sub(base, jj)
            mixed = vec_add(jx, xj)
            v20 = [quarter * (d - m) for d, m in zip(diff, mixed)]
            v02 = [quarter * (d + m) for d, m in zip(diff, mixed)]
            for target, vec in ((b11, v11), (b20, v20), (b02, v02)):
                target.comp[i][k] = vec
                target.comp[k][i] = vec_scale(-1, vec)
    return b20, b11, b02


def _vv_has_float(b: VectorValued2Form) -> bool:
    return any(
        isinstance(x, float) for row in b.comp for vec in row for x in vec
    )


def bc_split(
    structure: AlmostHermitianStructure, b: VectorValued2Form
) -> tuple[VectorValued2Form, VectorValued2Form]:
    """Split B into its Bianchi part B_b and cyclic part B_c:
    g(B_b(X,Y),Z) = (g(B(X,Y),Z) - g(B(Z,X),Y) - g(B(Y,Z),X)) / 2.
    """
    n = structure.dim
    g = [list(r) for r in structure.g]
    ginv = structure.g_inv
    lowered = [[mat_vec(g, b.comp[i][j]) for j in range(n)] for i in range(n)]
    half = 0.5 if _vv_has_float(b) else rat(1, 2)
    bb = VectorValued2Form.zero(n)
    for i in range(n):
        for j in range(i + 1, n):
            low = [
                half
                * (lowered[i][j][k] - lowered[k][i][j] - lowered[j][k][i])
                for k in range(n)
            ]
            vec = mat_vec(ginv, low)
            bb.comp[i][j] = vec
            bb.comp[j][i] = vec_scale(-1, vec)
    return bb, b - bb


def dense3(form: KForm) -> list:
    """Full antisymmetric rank-3 array of a 3-form's values on basis triples."""
    n = form.dim
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b, c), v in form.coeffs.items():
        out[a][b][c] = v
        out[b][c][a] = v
        out[c][a][b] = v
        out[a][c][b] = -v
        out[c][b][a] = -v
        out[b][a][c] = -v
    return out
