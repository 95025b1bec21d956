import random

import pytest

from liericci import JacobiError, LieAlgebra, parse_notation
from liericci.scalars import rat, vec_is_zero
from liericci.verify import random_two_step


def _simple(dim, entries):
    """Algebra from {(i, j, k): value} with 1-based indices, i < j."""
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), v in entries.items():
        c[i - 1][j - 1][k - 1] = v
        c[j - 1][i - 1][k - 1] = -v
    return LieAlgebra.from_structure_constants(dim, c)


def test_bracket_abelian_is_zero():
    algebra = LieAlgebra.abelian(4)
    assert algebra.bracket([1, 2, 3, 4], [4, 3, 2, 1]) == [0, 0, 0, 0]


def test_bracket_sign_convention_from_notation(kt_algebra):
    # "(0,0,0,12)" encodes c[1][2][4] = -1
    assert kt_algebra.c[0][1][3] == -1
    assert kt_algebra.bracket([1, 0, 0, 0], [0, 1, 0, 0]) == [0, 0, 0, -1]


def test_bracket_antisymmetry_random(kt_algebra):
    rng = random.Random(1)
    for _ in range(20):
        x = [rat(rng.randint(-4, 4)) for _ in range(4)]
        y = [rat(rng.randint(-4, 4)) for _ in range(4)]
        xy = kt_algebra.bracket(x, y)
        yx = kt_algebra.bracket(y, x)
        assert [a + b for a, b in zip(xy, yx)] == [0] * 4
        assert kt_algebra.bracket(x, x) == [0] * 4


def test_bracket_dimension_mismatch(kt_algebra):
    with pytest.raises(ValueError):
        kt_algebra.bracket([1, 0, 0], [0, 1, 0, 0])


def test_jacobi_defect_zero_cases(kt_algebra):
    assert LieAlgebra.abelian(3).jacobi_defect() == 0
    assert kt_algebra.jacobi_defect() == 0
    assert random_two_step(6, 5).jacobi_defect() == 0


def test_jacobi_defect_nonzero():
    # [e1,e2] = e3 and [e1,e3] = e1 breaks the identity:
    # [[e3,e1],e2] = -e3 is the only surviving cyclic term
    with pytest.raises(JacobiError) as err:
        _simple(3, {(1, 2, 3): 1, (1, 3, 1): 1})
    assert err.value.defect == 1
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2], c[1][0][2] = 1, -1
    c[0][2][0], c[2][0][0] = 1, -1
    bad = LieAlgebra(3, tuple(tuple(tuple(r) for r in row) for row in c))
    assert bad.jacobi_defect() == 1


def test_ad_matrix_examples(kt_algebra):
    assert LieAlgebra.abelian(2).ad_matrix([1, 1]) == [[0, 0], [0, 0]]
    m = kt_algebra.ad_matrix([1, 0, 0, 0])
    expect = [[0] * 4 for _ in range(4)]
    expect[3][1] = -1  # e2 -> -e4
    assert m == expect
    # nilpotent: every ad matrix is traceless
    for i in range(4):
        assert kt_algebra.trace_ad_basis(i) == 0


def test_unimodularity():
    assert LieAlgebra.abelian(5).is_unimodular()
    assert parse_notation("(0,0,0,12)").is_unimodular()
    # [e1, e2] = e2 has tr ad_{e1} = 1
    solvable = _simple(2, {(1, 2, 2): 1})
    assert not solvable.is_unimodular()


def test_series_and_step(kt_algebra):
    assert LieAlgebra.abelian(3).lower_central_series() == [3, 0]
    assert LieAlgebra.abelian(3).nilpotency_step() == 1
    assert kt_algebra.lower_central_series() == [4, 1, 0]
    assert kt_algebra.nilpotency_step() == 2
    filiform = parse_notation("(0,0,12,13)")
    assert filiform.lower_central_series() == [4, 2, 1, 0]
    assert filiform.nilpotency_step() == 3
    solvable = _simple(2, {(1, 2, 2): 1})
    assert solvable.nilpotency_step() is None


def test_center_and_derived(kt_algebra):
    center = kt_algebra.center()
    assert len(center) == 2
    for v in center:
        assert vec_is_zero(kt_algebra.bracket(v, [1, 0, 0, 0]))
        assert v[0] == 0 and v[1] == 0
    derived = kt_algebra.derived_algebra()
    assert len(derived) == 1
    assert derived[0][3] != 0


def test_two_step_predicate(kt_algebra):
    assert kt_algebra.is_two_step()
    assert not LieAlgebra.abelian(4).is_two_step()
    assert not parse_notation("(0,0,12,13)").is_two_step()


def test_jacobi_operational_on_random_vectors():
    algebra = random_two_step(6, 99)
    rng = random.Random(3)
    for _ in range(10):
        x, y, z = (
            [rat(rng.randint(-3, 3)) for _ in range(6)] for _ in range(3)
        )
        total = algebra.bracket(x, algebra.bracket(y, z))
        total = [
            a + b
            for a, b in zip(total, algebra.bracket(y, algebra.bracket(z, x)))
        ]
        total = [
            a + b
            for a, b in zip(total, algebra.bracket(z, algebra.bracket(x, y)))
        ]
        assert vec_is_zero(total)


def test_derived_acts_nilpotently_trace_zero():
    algebra = random_two_step(8, 12345)
    rng = random.Random(7)
    for _ in range(5):
        x = [rat(rng.randint(-3, 3)) for _ in range(8)]
        y = [rat(rng.randint(-3, 3)) for _ in range(8)]
        br = algebra.bracket(x, y)
        ad = algebra.ad_matrix(br)
        assert sum(ad[i][i] for i in range(8)) == 0


def test_float_conversion_round_trip(kt_algebra):
    lf = kt_algebra.to_float()
    assert not lf.is_exact()
    assert lf.c[0][1][3] == -1.0
    back = lf.to_exact()
    assert back.c[0][1][3] == rat(-1)


def test_antisymmetry_validation_rejects():
    c = [[[0] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1][0] = 1  # partner missing
    with pytest.raises(ValueError, match="antisymmetric"):
        LieAlgebra.from_structure_constants(2, c)
