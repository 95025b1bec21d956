import pytest

from liericci import (
    parse_notation,
    standard_j,
    validate_structure,
)
from liericci.scalars import identity_matrix
from liericci.verify import (
    aff_c_bi_invariant,
    iwasawa_balanced,
    kodaira_thurston_cosymplectic,
    kodaira_thurston_standard,
    solvable_e11_cosymplectic,
    three_step_example,
)


@pytest.fixture(scope="session")
def kt_algebra():
    return parse_notation("(0,0,0,12)")


@pytest.fixture(scope="session")
def kt_standard(kt_algebra):
    """(0,0,0,12) with the standard pairing: integrable, non-cosymplectic."""
    return kodaira_thurston_standard()


@pytest.fixture(scope="session")
def kt_cosymplectic():
    """(0,0,0,12) with omega = e^13 + e^42: almost Kahler."""
    return kodaira_thurston_cosymplectic()


@pytest.fixture(scope="session")
def kt_nonintegrable(kt_algebra):
    """(0,0,0,12) with the (1,3)(2,4) pairing: Nijenhuis tensor nonzero."""
    j = [[0] * 4 for _ in range(4)]
    j[2][0] = 1
    j[0][2] = -1
    j[3][1] = 1
    j[1][3] = -1
    return kt_algebra, validate_structure(4, identity_matrix(4), j)


@pytest.fixture(scope="session")
def iwasawa():
    return iwasawa_balanced()


@pytest.fixture(scope="session")
def solvable_cosymplectic():
    return solvable_e11_cosymplectic()


@pytest.fixture(scope="session")
def three_step():
    return three_step_example()


@pytest.fixture(scope="session")
def aff_c():
    return aff_c_bi_invariant()


@pytest.fixture(scope="session")
def abelian_structure():
    from liericci import LieAlgebra

    algebra = LieAlgebra.abelian(4)
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))
