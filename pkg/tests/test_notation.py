import random

import pytest

from liericci import JacobiError, NotationError, parse_notation, serialize_notation
from liericci.scalars import rat
from liericci.verify import random_two_step


def test_parse_kodaira_thurston():
    algebra = parse_notation("(0,0,0,12)")
    assert algebra.dim == 4
    assert algebra.c[0][1][3] == -1
    assert algebra.c[1][0][3] == 1
    others = [
        algebra.c[i][j][k]
        for i in range(4)
        for j in range(4)
        for k in range(4)
        if (i, j, k) not in ((0, 1, 3), (1, 0, 3))
    ]
    assert all(v == 0 for v in others)


def test_parse_abelian():
    algebra = parse_notation("(0,0,0,0)")
    assert algebra.is_abelian()


def test_parse_complex_heisenberg_is_two_step():
    algebra = parse_notation("(0,0,0,0,13-24,14+23)")
    assert algebra.nilpotency_step() == 2
    assert algebra.is_two_step()


def test_parse_coefficients_and_rationals():
    algebra = parse_notation("(0,0,3/212)")
    assert algebra.c[0][1][2] == rat(-3, 2)
    algebra = parse_notation("(0,0,-212)")
    assert algebra.c[0][1][2] == 2
    algebra = parse_notation("(0,0,212)")
    assert algebra.c[0][1][2] == -2


def test_parse_bracketed_high_dimension():
    slots = ["0"] * 10
    slots[9] = "[1,2]+2[3,4]"
    algebra = parse_notation("(" + ",".join(slots) + ")")
    assert algebra.dim == 10
    assert algebra.c[0][1][9] == -1
    assert algebra.c[2][3][9] == -2


def test_serialize_canonical_forms(kt_algebra):
    assert serialize_notation(kt_algebra) == "(0,0,0,12)"
    from liericci import LieAlgebra

    assert serialize_notation(LieAlgebra.abelian(4)) == "(0,0,0,0)"


def test_round_trip_corpus_hundred_cases():
    """100 valid notations varying dimension, coefficients and term count."""
    rng = random.Random(2024)
    corpus = []
    for k in range(60):
        dim = rng.choice((4, 5, 6, 7, 8))
        corpus.append(serialize_notation(random_two_step(dim, rng.getrandbits(30))))
    for k in range(20):
        # rational rescaling of a 2-step keeps the Jacobi identity
        algebra = random_two_step(6, 5000 + k)
        scale = rat(rng.randint(1, 9), rng.randint(1, 9))
        c = [
            [[scale * x for x in col] for col in row] for row in algebra.c
        ]
        from liericci import LieAlgebra

        corpus.append(
            serialize_notation(LieAlgebra.from_structure_constants(6, c))
        )
    for k in range(12):
        dim = rng.choice((10, 11, 12))
        corpus.append(serialize_notation(random_two_step(dim, 7000 + k)))
    corpus += [
        "(0,0,0,12)",
        "(0,0,0,0,13-24,14+23)",
        "(0,0,12,13)",
        "(13,-23,0,0)",
        "(0,0,1/212)",
        "(0,0,-5/312+2/313)",
        "(0,12)",
        "(0,0,0,0,0,12+34)",
    ]
    assert len(corpus) >= 100
    for text in corpus[:120]:
        algebra = parse_notation(text)
        again = serialize_notation(algebra)
        assert again == text or parse_notation(again).c == algebra.c
        assert parse_notation(again).c == algebra.c


def test_serialize_then_parse_is_identity_on_canonical():
    for seed in range(25):
        algebra = random_two_step(6, seed)
        text = serialize_notation(algebra)
        assert serialize_notation(parse_notation(text)) == text


@pytest.mark.parametrize(
    "bad, position",
    [
        ("", 0),
        ("0,0)", 0),
        ("(0,0", 3),
        ("(0,x)", 3),
        ("(0,0,0,1)", 7),
        ("(0,0,0,123/4)", 7),
        ("(0,0,0,21)", 7),       # indices must satisfy i < j
        ("(0,0,0,13+)", 10),
        ("(0,0,0,12,)", 10),
        ("(0,0,0,15)", 7),       # index out of range
        ("(0,0,0,[1,2])", 7),    # brackets only for dim >= 10
        ("(0, 0,0,12)", 3),      # whitespace is not part of the grammar
    ],
)
def test_parse_errors_carry_positions(bad, position):
    with pytest.raises(NotationError) as err:
        parse_notation(bad)
    assert err.value.position == position


def test_parse_rejects_jacobi_failures_with_defect():
    # "(-13,0,-12)" encodes [e1,e2] = e3 and [e1,e3] = e1; the (1,2,3)
    # cyclic sum leaves [[e3,e1],e2] = -e3 uncancelled
    with pytest.raises(JacobiError) as err:
        parse_notation("(-13,0,-12)")
    assert err.value.defect > 0


def test_two_dim_solvable_accepted():
    algebra = parse_notation("(0,12)")
    assert algebra.dim == 2
    assert not algebra.is_unimodular()
    assert serialize_notation(algebra) == "(0,12)"


def test_duplicate_terms_accumulate():
    algebra = parse_notation("(0,0,12+12)")
    assert algebra.c[0][1][2] == -2


def test_serialize_rejects_float_tensors(kt_algebra):
    with pytest.raises(TypeError):
        serialize_notation(kt_algebra.to_float())
