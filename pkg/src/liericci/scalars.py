"""Dual scalar backend (exact rationals / floats) and small dense linear algebra.

Exact mode is the default everywhere: scalars are arbitrary-precision
rationals (gmpy2.mpq when available, fractions.Fraction otherwise) and every
"is zero" question is decided exactly.  Float mode uses plain Python floats
with a global tolerance DEFAULT_EPS; functions that decide zero accept an
``eps`` argument, where ``eps=None`` means "exact if the data is exact,
DEFAULT_EPS otherwise".

Routines that divide normalize their input first so that exact matrices stay
exact (never int/int -> float) and float matrices never meet a rational
(gmpy2 would silently promote the mix to mpfr).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

try:  # gmpy2 rationals are ~10x faster than Fraction on the hot paths
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    _mpq = Fraction
    _HAVE_GMPY2 = False

Scalar = Union[int, float, Fraction]
Vector = list  # list[Scalar]
Matrix = list  # list[list[Scalar]]

DEFAULT_EPS = 1e-9

RAT_ZERO = _mpq(0)
RAT_ONE = _mpq(1)


def rat(value, denom=None):
    """Exact rational from int, string "p/q", Fraction or another rational."""
    if denom is not None:
        return _mpq(value, denom)
    if isinstance(value, float):
        raise TypeError(
            "refusing to coerce float %r to an exact rational; pass a string "
            "like 'p/q' instead" % (value,)
        )
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return _mpq(int(num), int(den))
        return _mpq(int(text))
    return _mpq(value)


def is_exact_scalar(x) -> bool:
    return not isinstance(x, float)


def exact_from_float(x: float):
    """Exact dyadic rational equal to the float (no rounding involved)."""
    return _mpq(Fraction(x))


def is_zero(x, eps: float | None = None) -> bool:
    """Zero test: exact for rationals/ints, |x| < eps for floats."""
    if isinstance(x, float):
        return abs(x) < (DEFAULT_EPS if eps is None else eps)
    return x == 0


def to_float(x) -> float:
    return float(x)


def format_scalar(x) -> str:
    """Canonical string form: "p/q" (or "p" for integers); repr for floats."""
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, int):
        return str(x)
    return str(_mpq(x))


def parse_scalar(value, mode: str = "exact"):
    """Read a scalar from JSON data (int or "p/q" string; numbers in float mode)."""
    if mode == "float":
        if isinstance(value, bool):
            raise TypeError("scalar expected, got bool")
        if isinstance(value, (int, float)):
            return float(value)
        return float(Fraction(value))
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(
            "exact mode accepts integers and 'p/q' strings, got %r" % (value,)
        )
    return rat(value)


def _is_float_data(rows) -> bool:
    return any(isinstance(x, float) for row in rows for x in row)


def _normalize_rows(rows):
    """Coerce to all-float or all-mpq so later divisions stay in the field."""
    if _is_float_data(rows):
        return [[float(x) for x in row] for row in rows], True
    return [[_mpq(x) for x in row] for row in rows], False


# ---------------------------------------------------------------------------
# vectors (int 0/1 are safe neutral elements in both modes)


def vec_zero(n: int) -> Vector:
    return [0] * n

def vec_add(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v)]

def vec_sub(u: Vector, v: Vector) -> Vector:
    return [a - b for a, b in zip(u, v)]

def vec_scale(c, u: Vector) -> Vector:
    return [c * a for a in u]

def vec_dot(u: Vector, v: Vector):
    return sum(a * b for a, b in zip(u, v))

def vec_is_zero(u: Vector, eps: float | None = None) -> bool:
    return all(is_zero(a, eps) for a in u)

def vec_max_abs(u: Vector):
    return max((abs(a) for a in u), default=0)


# ---------------------------------------------------------------------------
# matrices (dense, row-major lists of lists)


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

def zero_matrix(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[0] * m for _ in range(n)]

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m = len(b[0])
    bt = [[row[c] for row in b] for c in range(m)]
    return [[vec_dot(row, col) for col in bt] for row in a]

def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [vec_dot(row, v) for row in a]

def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]

def mat_max_abs(a: Matrix):
    return max((abs(x) for row in a for x in row), default=0)

def mat_equal(a: Matrix, b: Matrix, eps: float | None = None) -> bool:
    return all(
        is_zero(x - y, eps) for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )

def is_symmetric(a: Matrix, eps: float | None = None) -> bool:
    n = len(a)
    return all(is_zero(a[i][j] - a[j][i], eps) for i in range(n) for j in range(i))


def mat_inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse with partial pivoting; raises on singular input."""
    n = len(a)
    m, _ = _normalize_rows(a)
    one = 1.0 if _ else RAT_ONE
    aug = [m[i] + [one if i == j else one * 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if is_zero(aug[pivot_row][col]):
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [x / piv for x in aug[col]]
        for r in range(n):
            if r != col and not is_zero(aug[r][col]):
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_linear(a: Matrix, rhs: Vector) -> Vector:
    """Solve a x = rhs for square nonsingular a."""
    return mat_vec(mat_inverse(a), rhs)


def bareiss_det(a: Matrix):
    """Fraction-free (Bareiss) determinant; exact over the rationals."""
    n = len(a)
    if n == 0:
        return 1
    m, _ = _normalize_rows(a)
    sign = 1
    prev = m[0][0] * 0 + 1
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = next((r for r in range(k + 1, n) if not is_zero(m[r][k])), None)
            if swap is None:
                return m[0][0] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = m[i][k] * 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_spd(a: Matrix, eps: float | None = None) -> bool:
    """Symmetric positive definite via leading principal minors (Sylvester)."""
    if not is_symmetric(a, eps):
        return False
    n = len(a)
    for k in range(1, n + 1):
        minor = bareiss_det([row[:k] for row in a[:k]])
        if isinstance(minor, float):
            if minor <= (DEFAULT_EPS if eps is None else eps):
                return False
        elif minor <= 0:
            return False
    return True


def row_echelon(rows: Sequence[Vector], eps: float | None = None) -> list[Vector]:
    """Reduced row echelon form of the span of ``rows`` (zero rows dropped)."""
    if not rows:
        return []
    m, _ = _normalize_rows(rows)
    ncols = len(m[0])
    kept: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if not is_zero(m[r][col], eps):
                if pivot is None or abs(m[r][col]) > abs(m[pivot][col]):
                    pivot = r
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        piv = m[row][col]
        m[row] = [x / piv for x in m[row]]
        for r in range(len(m)):
            if r != row and not is_zero(m[r][col], eps):
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        kept.append(row)
        row += 1
        if row == len(m):
            break
    return [m[r] for r in kept]


def rank(rows: Sequence[Vector], eps: float | None = None) -> int:
    if not rows:
        return 0
    if _is_float_data(rows) or eps is not None:
        return len(row_echelon(rows, eps))
    return _bareiss_rank(rows)


def _bareiss_rank(rows: Sequence[Vector]) -> int:
    """Rank by fraction-free elimination (exact scalars only)."""
    m, _ = _normalize_rows(rows)
    nrows, ncols = len(m), len(m[0])
    prev = RAT_ONE
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev
            m[i][c] = RAT_ZERO
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def nullspace(a: Matrix, eps: float | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, from the reduced row echelon form."""
    nrows = len(a)
    if nrows == 0:
        raise ValueError("nullspace needs at least one row to know the width")
    ncols = len(a[0])
    as_float = _is_float_data(a)
    one = 1.0 if as_float else RAT_ONE
    red = row_echelon(a, eps)
    pivot_cols = [
        next(j for j in range(ncols) if not is_zero(row[j], eps)) for row in red
    ]
    basis = []
    for fc in (c for c in range(ncols) if c not in pivot_cols):
        v = [one * 0] * ncols
        v[fc] = one
        for row, pc in zip(red, pivot_cols):
            v[pc] = -row[fc]
        basis.append(v)
    return basis
