import random

import pytest

from liericci import (
    CURVATURE_TRACE_KAPPA,
    CanonicalFamily,
    NonHermitianConnection,
    canonical_connection,
    ce_differential,
    class_formula_ricci,
    codifferential_pairing,
    curvature,
    curvature_operators,
    levi_civita,
    random_compatible_structure,
    ricci_via_curvature,
    ricci_via_theta,
    theta_complex,
    theta_of_connection,
    theta_real,
    theta_trace,
    two_step_ricci,
    unitary_frame,
)
from liericci.scalars import identity_matrix, mat_mul, mat_vec, rat, vec_dot
from liericci.verify import class_instance, random_two_step

T_VALUES = (-1, 0, 1, 2)


def test_curvature_abelian_zero(abelian_structure):
    algebra, s = abelian_structure
    conn = levi_civita(algebra, s)
    r = curvature(algebra, conn, [1, 0, 0, 0], [0, 1, 0, 0])
    assert all(x == 0 for row in r for x in row)


def test_curvature_antisymmetry_and_j_commutation():
    algebra = random_two_step(6, 40)
    s = random_compatible_structure(algebra, 41)
    conn = canonical_connection(algebra, s, 1)
    rng = random.Random(0)
    j = [list(r) for r in s.J]
    for _ in range(5):
        x = [rat(rng.randint(-3, 3)) for _ in range(6)]
        y = [rat(rng.randint(-3, 3)) for _ in range(6)]
        rxy = curvature(algebra, conn, x, y)
        ryx = curvature(algebra, conn, y, x)
        assert all(
            a + b == 0 for ra, rb in zip(rxy, ryx) for a, b in zip(ra, rb)
        )
        assert mat_mul(rxy, j) == mat_mul(j, rxy)


def test_curvature_operators_match_pointwise():
    algebra = random_two_step(4, 42)
    s = random_compatible_structure(algebra, 43)
    conn = canonical_connection(algebra, s, 0)
    ops = curvature_operators(algebra, conn)
    basis = identity_matrix(4)
    for i in range(4):
        for j in range(4):
            assert ops[i][j] == curvature(algebra, conn, basis[i], basis[j])


def test_ricci_via_curvature_requires_hermitian(kt_algebra, kt_standard):
    _, s = kt_standard
    with pytest.raises(NonHermitianConnection):
        ricci_via_curvature(kt_algebra, s, levi_civita(kt_algebra, s))


def test_witness_values(kt_algebra, kt_standard):
    """On (0,0,0,12) with the standard structure the first canonical
    connection has rho_hat(e1, e2) = +1/2, and the Chern one is flat.

    The +1/2 was fixed by two independent hand computations (curvature
    trace of the projection connection and d of its definitional theta);
    the adjoint-codifferential closed form matches with the (t-1)/2
    factor.
    """
    _, s = kt_standard
    q = codifferential_pairing(kt_algebra, s)
    assert q == [0, 0, 0, 1]  # <omega, d e^4-flat> = 1
    for t, expected in ((-1, 1), (0, rat(1, 2)), (1, 0), (2, rat(-1, 2))):
        rho = ricci_via_theta(kt_algebra, s, t, q=q)
        assert rho.rho_hat.component(0, 1) == expected
        conn = canonical_connection(kt_algebra, s, t)
        rho_c = ricci_via_curvature(kt_algebra, s, conn, t)
        assert rho_c.rho_hat.equals(rho.rho_hat)


def test_theta_triple_agreement_and_definitional():
    for seed in (50, 51):
        algebra = random_two_step(6, seed)
        s = random_compatible_structure(algebra, seed + 5)
        q = codifferential_pairing(algebra, s)
        frame = unitary_frame(s)
        family = CanonicalFamily(algebra, s, frame)
        for t in T_VALUES:
            a = theta_trace(algebra, s, t, q=q)
            b = theta_real(algebra, s, t, frame=frame, q=q)
            c = theta_complex(algebra, s, t, frame=frame, q=q)
            d = theta_of_connection(algebra, s, family.connection(t), t,
                                    frame=frame)
            assert a.vartheta.equals(b.vartheta)
            assert b.vartheta.equals(c.vartheta)
            assert c.vartheta.equals(d.vartheta)


def test_theta_frame_independence():
    algebra = random_two_step(6, 60)
    s = random_compatible_structure(algebra, 61)
    q = codifferential_pairing(algebra, s)
    frames = [unitary_frame(s), unitary_frame(s, seed=3), unitary_frame(s, seed=9)]
    base = theta_complex(algebra, s, 1, frame=frames[0], q=q)
    for frame in frames[1:]:
        other = theta_complex(algebra, s, 1, frame=frame, q=q)
        assert other.vartheta.equals(base.vartheta)


def test_theta_special_t_formulas():
    """The t = 1, 0, -1 specializations written through the (0,1) and (1,0)
    projections of X agree with the general unitary-frame formula."""
    algebra = random_two_step(6, 70)
    s = random_compatible_structure(algebra, 71)
    q = codifferential_pairing(algebra, s)
    frame = unitary_frame(s)
    n = 6
    g = [list(r) for r in s.g]
    j = [list(r) for r in s.J]
    half = rat(1, 2)

    def bracket_pairing_imag(x, jx, u, ju, lam, sign):
        # Im g([X^{0,1 or 1,0}, W_r], W_rbar), times 2; X^{0,1} = (X+iJX)/2
        re_b = algebra.bracket(x, list(u))
        im_b = algebra.bracket(jx, list(u))
        re_b2 = algebra.bracket(x, list(ju))
        im_b2 = algebra.bracket(jx, list(ju))
        # [X +- iJX, W] = [X,W] +- i[JX,W], W = u - iJu
        re_part = [a + sign * b for a, b in zip(re_b, im_b2)]
        im_part = [sign * a - b for a, b in zip(im_b, re_b2)]
        imag = vec_dot(mat_vec(g, re_part), list(ju)) + vec_dot(
            mat_vec(g, im_part), list(u)
        )
        return imag / (2 * lam)

    for i in range(n):
        x = [1 if a == i else 0 for a in range(n)]
        jx = [j[a][i] for a in range(n)]
        chern = sum(
            bracket_pairing_imag(x, jx, u, ju, lam, +1)
            for u, ju, lam in zip(frame.vectors, frame.jvectors, frame.norms)
        )
        assert chern == theta_complex(algebra, s, 1, frame=frame, q=q).values()[i]
        first = sum(
            (
                vec_dot(mat_vec(g, algebra.bracket(x, list(u))), list(ju))
                - vec_dot(mat_vec(g, algebra.bracket(x, list(ju))), list(u))
            )
            / (2 * lam)
            for u, ju, lam in zip(frame.vectors, frame.jvectors, frame.norms)
        ) + half * q[i]
        assert first == theta_complex(algebra, s, 0, frame=frame, q=q).values()[i]
        bismut = sum(
            bracket_pairing_imag(x, jx, u, ju, lam, -1)
            for u, ju, lam in zip(frame.vectors, frame.jvectors, frame.norms)
        ) + q[i]
        assert bismut == theta_complex(algebra, s, -1, frame=frame, q=q).values()[i]


def test_ricci_closed_and_exact():
    algebra = random_two_step(6, 80)
    s = random_compatible_structure(algebra, 81)
    for t in T_VALUES:
        rho = ricci_via_theta(algebra, s, t)
        assert ce_differential(algebra, rho.rho_hat).is_zero_form()


def test_kappa_proportionality_three_step(three_step):
    """Calibration example: nonzero Ricci forms off t=1, equal through both
    routes with the frozen global constant."""
    algebra, s = three_step
    for t in T_VALUES:
        conn = canonical_connection(algebra, s, t)
        rho_c = ricci_via_curvature(algebra, s, conn, t)
        rho_t = ricci_via_theta(algebra, s, t)
        assert rho_c.rho_hat.equals(
            rho_t.rho_hat.scale(CURVATURE_TRACE_KAPPA)
        )
    assert not ricci_via_theta(algebra, s, 0).rho_hat.is_zero_form()
    assert ricci_via_theta(algebra, s, 1).rho_hat.is_zero_form()


def test_two_step_closed_form_and_precondition(kt_algebra, kt_standard,
                                               three_step):
    _, s = kt_standard
    for t in T_VALUES:
        a = two_step_ricci(kt_algebra, s, t)
        b = ricci_via_theta(kt_algebra, s, t)
        assert a.rho_hat.equals(b.rho_hat)
    algebra3, s3 = three_step
    with pytest.raises(ValueError, match="2-step"):
        two_step_ricci(algebra3, s3, 0)


def test_two_step_ricci_zero_iff_cosymplectic(kt_cosymplectic, kt_standard):
    algebra, s = kt_cosymplectic
    for t in T_VALUES:
        assert two_step_ricci(algebra, s, t).rho_hat.is_zero_form()
    algebra, s = kt_standard
    for t in (-1, 0, 2):
        assert not two_step_ricci(algebra, s, t).rho_hat.is_zero_form()
    assert two_step_ricci(algebra, s, 1).rho_hat.is_zero_form()


def test_t_independence_iff_cosymplectic_on_unimodular():
    """rho^t independent of t iff delta omega = 0, on unimodular samples."""
    from liericci.verify import (
        random_cosymplectic_two_step,
        solvable_e11_cosymplectic,
    )

    positives = [random_cosymplectic_two_step(4, s) for s in (1, 2)]
    positives.append(solvable_e11_cosymplectic())
    for algebra, s in positives:
        rhos = [ricci_via_theta(algebra, s, t).rho_hat for t in T_VALUES]
        assert all(r.equals(rhos[0]) for r in rhos)
    algebra = random_two_step(6, 90)
    s = random_compatible_structure(algebra, 91)
    q = codifferential_pairing(algebra, s)
    if any(v != 0 for v in q):
        rho0 = ricci_via_theta(algebra, s, 0).rho_hat
        rho2 = ricci_via_theta(algebra, s, 2).rho_hat
        assert not rho0.equals(rho2)


@pytest.mark.parametrize(
    "cls", ["bi_invariant", "anti_bi_invariant", "abelian", "anti_abelian"]
)
def test_class_formulas_agree_with_theta(cls):
    for seed in (7, 8):
        algebra, s = class_instance(cls, seed)
        for t in T_VALUES:
            rho = class_formula_ricci(algebra, s, t, cls)
            # the constructor asserts agreement with ricci_via_theta
            if cls != "abelian" and algebra.is_unimodular():
                assert rho.rho_hat.is_zero_form()


def test_class_formula_rejects_wrong_class(kt_algebra, kt_standard):
    _, s = kt_standard
    with pytest.raises(ValueError, match="not bi_invariant"):
        class_formula_ricci(kt_algebra, s, 0, "bi_invariant")
    with pytest.raises(ValueError, match="unknown structure class"):
        class_formula_ricci(kt_algebra, s, 0, "nonsense")


def test_class_formula_non_unimodular_bi_invariant(aff_c):
    """Non-unimodular control: the closed form still matches d theta, and
    theta itself matches the definitional value (t-1)/2 tr ad_{JX}."""
    algebra, s = aff_c
    j = [list(r) for r in s.J]
    for t in T_VALUES:
        class_formula_ricci(algebra, s, t, "bi_invariant")
        th = theta_trace(algebra, s, t)
        for i in range(4):
            je_i = [j[a][i] for a in range(4)]
            tr = sum(je_i[b] * algebra.trace_ad_basis(b) for b in range(4))
            assert th.values()[i] == rat(t - 1, 2) * tr


def test_abelian_class_formula_structure():
    """For unimodular abelian-J instances the Ricci form carries the same
    (t-1)/2 pairing dependence as the 2-step closed form."""
    algebra, s = class_instance("abelian", 12)
    assert algebra.is_unimodular()
    q = codifferential_pairing(algebra, s)
    for t in T_VALUES:
        rho = class_formula_ricci(algebra, s, t, "abelian", q=q)
        expect = two_step_ricci(algebra, s, t, q=q)
        assert rho.rho_hat.equals(expect.rho_hat)


def test_theta_of_levi_civita_well_defined(kt_algebra, kt_standard):
    """The definitional theta only needs a metric connection."""
    _, s = kt_standard
    th = theta_of_connection(kt_algebra, s, levi_civita(kt_algebra, s))
    assert th.vartheta.dim == 4
