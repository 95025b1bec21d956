"""Acceptance suite: one test per acceptance criterion, each printing a
PASS/FAIL line (run with -s to see them inline).

Criterion 5 contains one sub-clause that is provably unattainable as stated
(the vanishing, for every t, of the (1,1) part of the Bianchi-type torsion
projection); it is implemented faithfully in
test_criterion_05b_bianchi_clause_as_stated and marked as a strict expected
failure.  The exact identity that quantity satisfies instead is asserted in
tests/test_connections.py::test_bianchi_11_identity_and_its_zero_locus, and
the README's "known defect" section walks through the computation.
Everything else runs at full scale and strength.
"""

import random
import time

import pytest

from liericci import (
    CURVATURE_TRACE_KAPPA,
    CanonicalFamily,
    canonical_connection,
    ce_differential,
    class_predicates,
    codifferential,
    codifferential_pairing,
    hermitian_check,
    omega_form,
    parse_notation,
    random_compatible_structure,
    ricci_via_curvature,
    ricci_via_theta,
    serialize_notation,
    theta_complex,
    theta_real,
    theta_trace,
    torsion,
    torsion_type_report,
    two_step_ricci,
    unitary_frame,
)
from liericci.notation import NotationError
from liericci.scalars import rat, vec_is_zero
from liericci.verify import (
    SampleSpec,
    consistency_suite,
    corollary33_suite,
    iwasawa_balanced,
    kodaira_thurston_cosymplectic,
    kodaira_thurston_standard,
    prop42_suite,
    random_cosymplectic_two_step,
    random_two_step,
    theorem1_suite,
)

T_SWEEP = (-1, 0, 1, 2)
MASTER_SEED = 20260809


def _announce(name, ok, extra=""):
    print("criterion %s: %s%s" % (name, "PASS" if ok else "FAIL",
                                  " (%s)" % extra if extra else ""))
    assert ok


def test_criterion_01_chern_ricci_flat_scale():
    """500 random 2-step samples per dim in {4, 6, 8}: rho^1 = 0 exactly
    through both routes, under 120 s; float mode residuals below 1e-9."""
    start = time.time()
    for dim in (4, 6, 8):
        report = theorem1_suite(SampleSpec(dim=dim, count=500,
                                           seed=MASTER_SEED))
        assert report.passed, report.failing_witness
        assert report.max_residual == 0.0
    elapsed = time.time() - start
    float_worst = 0.0
    for dim in (4, 6, 8):
        report = theorem1_suite(
            SampleSpec(dim=dim, count=100, seed=MASTER_SEED, mode="float")
        )
        assert report.passed, report.failing_witness
        float_worst = max(float_worst, report.max_residual)
    assert float_worst < 1e-9
    _announce("1", elapsed < 120.0,
              "exact 3x500 in %.1fs, float residual %.1e" % (elapsed,
                                                             float_worst))


def test_criterion_02_cosymplectic_biconditional():
    """Constructed cosymplectic 2-step instances are Ricci-flat at every t;
    non-cosymplectic ones are non-flat at every t != 1.  Exact."""
    rng = random.Random(MASTER_SEED + 2)
    for dim in (4, 6, 8):
        for k in range(12):
            algebra, s = random_cosymplectic_two_step(dim, rng)
            q = codifferential_pairing(algebra, s)
            assert vec_is_zero(q)
            for t in (-1, 0, 2):
                assert ricci_via_theta(algebra, s, t, q=q).rho_hat.is_zero_form()
    for algebra, s in (kodaira_thurston_cosymplectic(), iwasawa_balanced()):
        for t in T_SWEEP:
            assert ricci_via_theta(algebra, s, t).rho_hat.is_zero_form()
    negatives = 0
    for k in range(40):
        algebra = random_two_step(6, rng)
        s = random_compatible_structure(algebra, rng.getrandbits(32))
        q = codifferential_pairing(algebra, s)
        if vec_is_zero(q):
            continue
        negatives += 1
        for t in (-1, 0, 2):
            assert not ricci_via_theta(algebra, s, t, q=q).rho_hat.is_zero_form()
        assert ricci_via_theta(algebra, s, 1, q=q).rho_hat.is_zero_form()
    assert negatives >= 20
    _announce("2", True, "%d non-cosymplectic negatives" % negatives)


def test_criterion_03_two_step_closed_form():
    """On 2-step samples the d-theta Ricci form equals the closed form
    (t-1)/2 <delta omega, [X,Y]^nat> entrywise, exactly.

    The prefactor is stated for the adjoint codifferential; under the
    opposite d* sign convention the same closed form reads (1-t)/2.  The
    value is pinned by the curvature-trace route, which agrees entrywise.
    """
    rng = random.Random(MASTER_SEED + 3)
    checked = 0
    for dim in (4, 6, 8):
        for k in range(25):
            algebra = random_two_step(dim, rng)
            s = random_compatible_structure(algebra, rng.getrandbits(32))
            q = codifferential_pairing(algebra, s)
            for t in T_SWEEP + (rat(5, 3),):
                closed = two_step_ricci(algebra, s, t, q=q)
                via_theta = ricci_via_theta(algebra, s, t, q=q)
                assert closed.rho_hat.equals(via_theta.rho_hat)
                # the closed form, written out entrywise
                half = rat(1, 2)
                for a in range(dim):
                    for b in range(a + 1, dim):
                        pairing = sum(
                            x * y
                            for x, y in zip(q, algebra.bracket_basis(a, b))
                        )
                        assert via_theta.rho_hat.component(a, b) == \
                            half * (rat(t) - 1) * pairing
                checked += 1
    _announce("3", True, "%d (sample, t) pairs" % checked)


def test_criterion_04_triple_theta_agreement():
    """theta_complex = theta_real = theta_trace exactly on 500 random
    structures, each at t in {-1, 0, 1, 2}."""
    rng = random.Random(MASTER_SEED + 4)
    count = 0
    while count < 500:
        dim = rng.choice((4, 4, 6, 6, 6, 8))
        algebra = random_two_step(dim, rng)
        s = random_compatible_structure(algebra, rng.getrandbits(32))
        q = codifferential_pairing(algebra, s)
        frame = unitary_frame(s)
        for t in T_SWEEP:
            a = theta_trace(algebra, s, t, q=q)
            b = theta_real(algebra, s, t, frame=frame, q=q)
            c = theta_complex(algebra, s, t, frame=frame, q=q)
            assert a.vartheta.equals(b.vartheta)
            assert b.vartheta.equals(c.vartheta)
        count += 1
    _announce("4", True, "500 structures x 4 t-values")


def test_criterion_05a_hermitian_family_gates():
    """nabla^t g = 0 and nabla^t J = 0 exactly; t=1 kills the (1,1) torsion;
    t=0 kills the (2,0) torsion; integrable samples have totally skew
    torsion at t=-1."""
    rng = random.Random(MASTER_SEED + 5)
    samples = []
    for dim in (4, 6):
        for k in range(10):
            algebra = random_two_step(dim, rng)
            samples.append(
                (algebra, random_compatible_structure(algebra,
                                                      rng.getrandbits(32)))
            )
    samples.append(kodaira_thurston_standard())
    samples.append(iwasawa_balanced())
    for algebra, s in samples:
        family = CanonicalFamily(algebra, s)
        integrable = class_predicates(algebra, s)["integrable"]
        for t in T_SWEEP + (rat(5, 3),):
            conn = family.connection(t)
            gates = hermitian_check(algebra, s, conn)
            assert gates["grad_g_norm"] == 0
            assert gates["grad_J_norm"] == 0
            types = torsion_type_report(s, torsion(algebra, conn))
            if t == 1:
                assert types["norm_T11"] == 0
            if t == 0:
                assert types["norm_T20"] == 0
                assert types["norm_T11_b"] == 0
            if integrable and t == -1:
                assert types["skew_defect"] == 0
    _announce("5a", True, "%d samples" % len(samples))


@pytest.mark.xfail(
    strict=True,
    reason="unattainable as stated: with the implemented Bianchi-type "
    "splitting the (1,1) part of T_b equals -(t/2) [(d^c omega)^+]^(1,1), "
    "which vanishes for every t only on quasi-Kahler structures; see "
    "test_bianchi_11_identity_and_its_zero_locus and the README",
)
def test_criterion_05b_bianchi_clause_as_stated():
    """As stated: for all t, the torsion of the canonical family has
    vanishing (1,1) Bianchi part.  Fails at t != 0 off the quasi-Kahler
    locus; the exact identity it violates is asserted green in
    tests/test_connections.py::test_bianchi_11_identity_and_its_zero_locus.
    """
    algebra, s = kodaira_thurston_standard()
    for t in T_SWEEP:
        types = torsion_type_report(
            s, torsion(algebra, canonical_connection(algebra, s, t))
        )
        assert types["norm_T11_b"] == 0, (
            "norm_T11_b = %s at t = %s" % (types["norm_T11_b"], t)
        )


def test_criterion_06_cosymplectic_t_independence():
    """Every cosymplectic sample, including non-nilpotent unimodular ones,
    has the same Ricci form for t in {-1, 0, 1, 2}."""
    report = corollary33_suite(SampleSpec(dim=6, count=40,
                                          seed=MASTER_SEED + 6))
    assert report.passed, report.failing_witness
    _announce("6", True, "%d samples" % len(report.verdicts))


def test_criterion_07_class_formulas():
    """The four structure-class closed forms agree with the d-theta route;
    unimodular bi-invariant, anti-bi-invariant and anti-abelian instances
    are Ricci-flat at every sampled t."""
    report = prop42_suite(SampleSpec(dim=6, count=24, seed=MASTER_SEED + 7))
    assert report.passed, report.failing_witness
    _announce("7", True, "%d samples" % len(report.verdicts))


def test_criterion_08_kodaira_thurston_concordance():
    """(0,0,0,12) with omega = e^13 + e^42: d omega = 0, delta omega = 0 and
    rho^t = 0 for all sampled t through both routes."""
    algebra, s = kodaira_thurston_cosymplectic()
    om = omega_form(s)
    assert ce_differential(algebra, om).is_zero_form()
    assert codifferential(algebra, s, om).is_zero_form()
    family = CanonicalFamily(algebra, s)
    for t in T_SWEEP + (rat(5, 3),):
        rho_t = ricci_via_theta(algebra, s, t)
        assert rho_t.rho_hat.is_zero_form()
        rho_c = ricci_via_curvature(algebra, s, family.connection(t), t)
        assert rho_c.rho_hat.is_zero_form()
    _announce("8", True)


def test_criterion_09_structural_battery():
    """d^2 = 0, codifferential adjointness, the two cosymplectic
    characterizations, affinity of the family in t, quasi-Kahler
    degeneration and the global kappa between the two Ricci routes, on 200
    samples per dim in {4, 6}, exactly, under 120 s."""
    start = time.time()
    for dim in (4, 6):
        report = consistency_suite(
            SampleSpec(dim=dim, count=200, seed=MASTER_SEED + 9)
        )
        assert report.passed, report.failing_witness
    elapsed = time.time() - start
    # the battery asserts kappa proportionality internally; pin the value
    assert CURVATURE_TRACE_KAPPA == 1
    _announce("9", elapsed < 120.0, "2x200 samples in %.1fs" % elapsed)


def test_criterion_10_parser_round_trip_corpus():
    """100% round-trip on 100+ notations with rational coefficients,
    multi-term slots and bracketed indices; error paths carry positions."""
    rng = random.Random(MASTER_SEED + 10)
    corpus = []
    for k in range(70):
        dim = rng.choice((4, 5, 6, 7, 8, 9))
        corpus.append(serialize_notation(random_two_step(dim,
                                                         rng.getrandbits(30))))
    from liericci import LieAlgebra

    for k in range(15):
        algebra = random_two_step(6, rng.getrandbits(30))
        scale = rat(rng.randint(1, 9), rng.randint(2, 9))
        c = [[[scale * x for x in col] for col in row] for row in algebra.c]
        corpus.append(serialize_notation(
            LieAlgebra.from_structure_constants(6, c)))
    for k in range(15):
        corpus.append(serialize_notation(
            random_two_step(rng.choice((10, 12)), rng.getrandbits(30))))
    corpus += ["(0,0,0,12)", "(0,0,0,0,13-24,14+23)", "(0,0,12,13)",
               "(0,0,1/212-3/413)", "(13,-23,0,0)"]
    assert len(corpus) >= 100
    for text in corpus:
        algebra = parse_notation(text)
        assert serialize_notation(algebra) == text
    # error paths, each with a character position
    failures = 0
    for bad in ("", "(", "(0,0", "(0,x)", "(0,0,0,1)", "(0,0,0,99)",
                "(0,0,0,21)", "(0,0,0,12+)", "(0,,0,12)", "(0 ,0,0,12)"):
        try:
            parse_notation(bad)
        except NotationError as exc:
            assert exc.position >= 0
            failures += 1
    assert failures == 10
    _announce("10", True, "%d round-trips" % len(corpus))
