import pytest
from hypothesis import given, strategies as st

from liericci.scalars import (
    bareiss_det,
    format_scalar,
    identity_matrix,
    is_spd,
    is_zero,
    mat_inverse,
    mat_mul,
    nullspace,
    parse_scalar,
    rank,
    rat,
    row_echelon,
    solve_linear,
)

rationals = st.builds(
    rat,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=9),
)


def test_rat_parsing():
    assert rat("3/4") == rat(3, 4)
    assert rat("-7") == -7
    assert rat(" 5/10 ") == rat(1, 2)
    with pytest.raises(TypeError):
        rat(0.5)


def test_format_round_trip():
    for text in ("0", "1", "-3", "5/7", "-12/5"):
        assert format_scalar(rat(text)) == text
    assert format_scalar(3) == "3"


def test_parse_scalar_modes():
    assert parse_scalar("1/2") == rat(1, 2)
    assert parse_scalar(4) == 4
    assert parse_scalar("1/2", mode="float") == 0.5
    with pytest.raises(TypeError):
        parse_scalar(0.25)
    with pytest.raises(TypeError):
        parse_scalar(True)


def test_is_zero_modes():
    assert is_zero(rat(0))
    assert not is_zero(rat(1, 10**12))
    assert is_zero(1e-12)
    assert not is_zero(1e-6)
    assert not is_zero(1e-6, eps=1e-7)
    assert is_zero(1e-6, eps=1e-5)


@given(st.lists(rationals, min_size=4, max_size=4))
def test_bareiss_det_matches_cofactor_expansion(entries):
    m = [entries[:2], entries[2:]]
    assert bareiss_det(m) == m[0][0] * m[1][1] - m[0][1] * m[1][0]


def test_inverse_and_solve():
    m = [[rat(2), rat(1), 0], [rat(1), rat(3), rat(1)], [0, rat(1), rat(2)]]
    inv = mat_inverse(m)
    assert mat_mul(m, inv) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    rhs = [rat(1), rat(0), rat(-1)]
    x = solve_linear(m, rhs)
    assert [sum(a * b for a, b in zip(row, x)) for row in m] == rhs


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        mat_inverse([[rat(1), rat(2)], [rat(2), rat(4)]])


def test_rank_and_nullspace():
    rows = [[rat(1), rat(2), rat(3)], [rat(2), rat(4), rat(6)],
            [rat(0), rat(1), rat(1)]]
    assert rank(rows) == 2
    ns = nullspace(rows)
    assert len(ns) == 1
    v = ns[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_rank_float_mode():
    rows = [[1.0, 2.0], [2.0, 4.0 + 1e-13]]
    assert rank(rows, eps=1e-9) == 1
    assert rank(rows, eps=1e-16) == 2


def test_row_echelon_idempotent():
    rows = [[rat(0), rat(2)], [rat(3), rat(1)]]
    red = row_echelon(rows)
    assert row_echelon(red) == red
    assert red[0][0] == 1


def test_spd_detection():
    assert is_spd(identity_matrix(3))
    assert is_spd([[rat(2), rat(1)], [rat(1), rat(2)]])
    assert not is_spd([[rat(1), rat(3)], [rat(3), rat(1)]])
    assert not is_spd([[rat(1), rat(2)], [rat(1), rat(2)]])  # not symmetric
    assert not is_spd([[0, 0], [0, 0]])


@given(st.lists(rationals, min_size=9, max_size=9))
def test_bareiss_det_multiplicative_on_products(entries):
    a = [entries[:3], entries[3:6], entries[6:]]
    b = [[1, 1, 0], [0, 1, 2], [0, 0, 1]]
    assert bareiss_det(mat_mul(a, b)) == bareiss_det(a) * bareiss_det(b)
