"""Random instance generators and batch verification suites.

Every suite is a deterministic function of its SampleSpec seed, draws all
randomness from one random.Random stream, and returns a SuiteReport whose
failing samples carry a serialized witness (algebra + structure + check
name), so any failure can be replayed bit for bit in exact mode.

Cosymplectic instances are built by construction, not rejection: a curated
almost-Kahler base structure is transported along a random unipotent
change of basis.  Lie algebra isomorphisms commute with the invariant
exterior derivative, so d omega = 0 (hence delta omega = 0) survives the
transport while the structure constants, metric and J all become generic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import LieAlgebra
from .calculus import (
    KForm,
    VectorValued2Form,
    bc_split,
    ce_differential,
    codifferential,
    dc_operator,
    dense3,
    form_inner_product,
    omega_form,
    omega_power,
    plus_minus_split,
    type_split_vv,
)
from .classify import class_predicates
from .connections import (
    CanonicalFamily,
    canonical_connection,
    canonical_connection_integrable,
    hermitian_check,
    torsion,
    torsion_type_report,
)
from .documents import problem_to_dict
from .notation import parse_notation
from .ricci import (
    CURVATURE_TRACE_KAPPA,
    codifferential_pairing,
    ricci_via_curvature,
    ricci_via_theta,
    theta_complex,
    theta_of_connection,
    theta_real,
    theta_trace,
    two_step_ricci,
    class_formula_ricci,
)
from .scalars import (
    identity_matrix,
    is_zero,
    mat_inverse,
    mat_mul,
    mat_vec,
    rat,
    to_float,
    transpose,
    vec_is_zero,
)
from .structures import (
    AlmostHermitianStructure,
    nijenhuis_tensor,
    random_compatible_structure,
    standard_j,
    unitary_frame,
    validate_structure,
)

T_SWEEP = (-1, 0, 1, 2)


@dataclass(frozen=True)
class SampleSpec:
    """Parameters of a verification run.

    ``step`` selects the nilpotency class of randomly generated algebras
    (1 abelian, 2 two-step, 3 three-step); the theorem suites require
    step <= 2, matching their hypotheses, while the consistency battery
    accepts any value and records Chern Ricci norms of non-2-step samples
    as exploratory observations.
    """

    dim: int = 6
    count: int = 50
    seed: int = 0
    mode: str = "exact"
    eps: float = 1e-9
    step: int = 2

    def __post_init__(self):
        if self.dim % 2 or self.dim < 2:
            raise ValueError("dim must be a positive even integer")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")
        if self.step not in (1, 2, 3):
            raise ValueError("step must be 1, 2 or 3")


@dataclass
class SuiteReport:
    """Outcome of one suite: per-sample verdicts plus a failure witness."""

    suite: str
    spec: SampleSpec
    verdicts: list = field(default_factory=list)
    max_residual: float = 0.0
    failing_witness: dict | None = None

    @property
    def passed(self) -> bool:
        return all(v["ok"] for v in self.verdicts)

    def record(self, index: int, dim: int, ok: bool, check: str | None = None,
               witness: dict | None = None,
               observations: dict | None = None) -> None:
        verdict = {"index": index, "dim": dim, "ok": ok}
        if check:
            verdict["check"] = check
        if observations:
            verdict["observations"] = observations
        self.verdicts.append(verdict)
        if not ok and self.failing_witness is None:
            self.failing_witness = witness or {}
            self.failing_witness.setdefault("index", index)
            if check:
                self.failing_witness.setdefault("check", check)

    def bump_residual(self, value) -> None:
        v = abs(to_float(value))
        if v > self.max_residual:
            self.max_residual = v

    def to_dict(self) -> dict:
        from . import __version__

        return {
            "suite": self.suite,
            "passed": self.passed,
            "dim": self.spec.dim,
            "count": self.spec.count,
            "seed": self.spec.seed,
            "mode": self.spec.mode,
            "eps": self.spec.eps,
            "step": self.spec.step,
            "kappa": str(CURVATURE_TRACE_KAPPA),
            "version": __version__,
            "samples": len(self.verdicts),
            "max_residual": self.max_residual,
            "verdicts": sorted(self.verdicts, key=lambda v: v["index"]),
            "failing_witness": self.failing_witness,
        }


def _witness(algebra: LieAlgebra, structure: AlmostHermitianStructure,
             **extra) -> dict:
    doc = problem_to_dict(algebra, structure,
                          prefer_notation=algebra.is_exact())
    doc.update(extra)
    return doc


# ---------------------------------------------------------------------------
# generators


def random_two_step(dim: int, seed_or_rng) -> LieAlgebra:
    """Random 2-step (possibly abelian) nilpotent algebra.

    The last c basis vectors are central and all brackets of the first
    dim - c vectors land in them, so the Jacobi identity holds by
    construction and the algebra is unimodular.
    """
    rng = (seed_or_rng if isinstance(seed_or_rng, random.Random)
           else random.Random(seed_or_rng))
    if dim < 4:
        raise ValueError("random_two_step needs dim >= 4")
    cdim = rng.randint(1, dim // 2)
    gen = dim - cdim
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(gen):
        for j in range(i + 1, gen):
            for k in range(gen, dim):
                v = rng.randint(-3, 3)
                if v:
                    c[i][j][k] = v
                    c[j][i][k] = -v
    return LieAlgebra.from_structure_constants(dim, c, validate=True)


def random_nilpotent(dim: int, step: int, seed_or_rng) -> LieAlgebra:
    """Random nilpotent algebra of the requested step (1, 2 or 3).

    Step 3 pads a transported copy of the filiform algebra with de^3 =
    e^12, de^4 = e^13 by central directions.
    """
    rng = (seed_or_rng if isinstance(seed_or_rng, random.Random)
           else random.Random(seed_or_rng))
    if step == 1:
        return LieAlgebra.abelian(dim)
    if step == 2:
        return random_two_step(dim, rng)
    if dim < 4:
        raise ValueError("step 3 needs dim >= 4")
    base = parse_notation("(0,0,12,13)")
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(4):
        for j in range(4):
            for k in range(4):
                c[i][j][k] = base.c[i][j][k]
    padded = LieAlgebra.from_structure_constants(dim, c, validate=True)
    p = _unipotent(dim, rng)
    p_cols = transpose(p)
    p_inv = mat_inverse(p)
    moved = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            br = mat_vec(p_inv, padded.bracket(p_cols[i], p_cols[j]))
            for k in range(dim):
                moved[i][j][k] = br[k]
                moved[j][i][k] = -br[k]
    return LieAlgebra.from_structure_constants(dim, moved, validate=True)


def _unipotent(dim: int, rng: random.Random, spread: int = 1) -> list:
    """Sparse product of unit-triangular integer matrices.

    Dense unit-triangular factors have exponentially large inverses, which
    would push transported instances outside the float tolerance, so only
    a few off-diagonal entries are populated.
    """
    lower = identity_matrix(dim)
    upper = identity_matrix(dim)
    for _ in range(dim // 2 + 1):
        a, b = rng.randrange(dim), rng.randrange(dim)
        if a > b:
            lower[a][b] = rng.randint(-spread, spread)
        elif a < b:
            upper[a][b] = rng.randint(-spread, spread)
    return mat_mul(lower, upper)


def transport_instance(
    algebra: LieAlgebra,
    structure: AlmostHermitianStructure,
    seed_or_rng,
    spread: int = 1,
):
    """Pull the whole instance back along a random unipotent basis change.

    With x' = P x:  [X, Y]' = P^{-1} [P X, P Y],  g' = P^T g P,
    J' = P^{-1} J P.  Structure classes, cosymplecticity and all Ricci
    statements are isomorphism-invariant, so transported instances inherit
    them with generic-looking data.
    """
    rng = (seed_or_rng if isinstance(seed_or_rng, random.Random)
           else random.Random(seed_or_rng))
    n = algebra.dim
    p = _unipotent(n, rng, spread)
    p_cols = transpose(p)
    p_inv = mat_inverse(p)
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            br = mat_vec(p_inv, algebra.bracket(p_cols[i], p_cols[j]))
            for k in range(n):
                c[i][j][k] = br[k]
                c[j][i][k] = -br[k]
    moved = LieAlgebra.from_structure_constants(n, c, validate=True)
    g = [list(r) for r in structure.g]
    j = [list(r) for r in structure.J]
    g_new = mat_mul(transpose(p), mat_mul(g, p))
    j_new = mat_mul(p_inv, mat_mul(j, p))
    return moved, validate_structure(n, g_new, j_new)


# curated instances ----------------------------------------------------------


def _structure_from_pairs(dim: int, pairs) -> list:
    """J matrix sending e_a -> sign * e_b for each ((a, b), sign) pair."""
    j = [[0] * dim for _ in range(dim)]
    for (a, b), sign in pairs:
        j[b - 1][a - 1] = sign
        j[a - 1][b - 1] = -sign
    return j


def kodaira_thurston_cosymplectic():
    """(0,0,0,12) with omega = e^13 + e^42: almost Kahler, cosymplectic."""
    algebra = parse_notation("(0,0,0,12)")
    j = _structure_from_pairs(4, [((1, 3), 1), ((4, 2), 1)])
    return algebra, validate_structure(4, identity_matrix(4), j)


def kodaira_thurston_standard():
    """(0,0,0,12) with the standard pairing: integrable, not cosymplectic."""
    algebra = parse_notation("(0,0,0,12)")
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))


def iwasawa_balanced():
    """Complex Heisenberg algebra with its complex J: 2-step, integrable,
    cosymplectic but with d omega != 0."""
    algebra = parse_notation("(0,0,0,0,13-24,14+23)")
    return algebra, validate_structure(6, identity_matrix(6), standard_j(6))


def solvable_e11_cosymplectic():
    """e(1,1) + R: unimodular, solvable, not nilpotent; standard structure
    is almost Kahler hence cosymplectic."""
    algebra = parse_notation("(13,-23,0,0)")
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))


def euclidean_e2_flat():
    """e(2) + R: unimodular solvable, standard structure almost Kahler."""
    algebra = parse_notation("(-23,13,0,0)")
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))


def three_step_example():
    """(0,0,12,13): 3-step nilpotent, outside the 2-step theorems."""
    algebra = parse_notation("(0,0,12,13)")
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))


def compact_so3_example():
    """so(3) + R with the standard pairing (non-solvable unimodular)."""
    algebra = parse_notation("(-23,13,-12,0)")
    return algebra, validate_structure(4, identity_matrix(4), standard_j(4))


_AK_BASES = {
    4: ("(0,0,0,12)", [((1, 3), 1), ((4, 2), 1)]),
    6: ("(0,0,0,0,0,12)", [((1, 6), 1), ((2, 3), 1), ((4, 5), 1)]),
    8: ("(0,0,0,0,0,0,0,12)",
        [((1, 8), 1), ((2, 3), 1), ((4, 5), 1), ((6, 7), 1)]),
}


def almost_kahler_base(dim: int):
    if dim not in _AK_BASES:
        raise ValueError("no curated almost Kahler base in dimension %d" % dim)
    notation, pairs = _AK_BASES[dim]
    algebra = parse_notation(notation)
    j = _structure_from_pairs(dim, pairs)
    return algebra, validate_structure(dim, identity_matrix(dim), j)


def random_cosymplectic_two_step(dim: int, seed_or_rng):
    """Random 2-step cosymplectic instance: transported almost-Kahler base."""
    return transport_instance(*almost_kahler_base(dim), seed_or_rng)


# special structure classes on a 2-step paired basis -------------------------


def _paired_two_step(seed_or_rng, relations: str) -> tuple:
    """dim-6 2-step algebras over generators e1..e4 with center e5, e6 and
    the standard J; brackets constrained so the requested class identity
    holds for J e1 = e2, J e3 = e4, J e5 = e6."""
    rng = (seed_or_rng if isinstance(seed_or_rng, random.Random)
           else random.Random(seed_or_rng))
    dim = 6

    def central(nonzero=True):
        while True:
            v = [0, 0, 0, 0, rng.randint(-2, 2), rng.randint(-2, 2)]
            if not nonzero or any(v):
                return v

    j0 = standard_j(dim)

    def jvec(v):
        return mat_vec(j0, v)

    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]

    def setb(i, j, vec):
        for k, x in enumerate(vec):
            c[i][j][k] = x
            c[j][i][k] = -x

    v13 = central()
    if relations == "abelian":
        v12, v14, v34 = central(False), central(False), central(False)
        setb(0, 1, v12)
        setb(2, 3, v34)
        setb(0, 2, v13)
        setb(0, 3, v14)
        setb(1, 3, v13)            # [e2,e4] = [e1,e3]
        setb(1, 2, [-x for x in v14])  # [e2,e3] = -[e1,e4]
    elif relations == "anti_abelian":
        v14 = central(False)
        setb(0, 2, v13)
        setb(0, 3, v14)
        setb(1, 3, [-x for x in v13])  # [e2,e4] = -[e1,e3]
        setb(1, 2, v14)                # [e2,e3] = [e1,e4]
    elif relations == "bi_invariant":
        setb(0, 2, v13)
        setb(0, 3, jvec(v13))          # [e1,e4] = J[e1,e3]
        setb(1, 2, jvec(v13))          # [e2,e3] = J[e1,e3]
        setb(1, 3, [-x for x in v13])  # [e2,e4] = -[e1,e3]
    elif relations == "anti_bi_invariant":
        mj = [-x for x in jvec(v13)]
        setb(0, 2, v13)
        setb(0, 3, mj)                 # [e1,e4] = -J[e1,e3]
        setb(1, 2, mj)                 # [e2,e3] = -J[e1,e3]
        setb(1, 3, [-x for x in v13])  # [e2,e4] = -[e1,e3]
    else:
        raise ValueError("unknown relation set %r" % relations)
    algebra = LieAlgebra.from_structure_constants(dim, c, validate=True)
    g0 = [[rng.randint(-1, 1) for _ in range(dim)] for _ in range(dim)]
    gg = mat_mul(transpose(g0), g0)
    for i in range(dim):
        gg[i][i] = gg[i][i] + 1 + rng.randint(0, 1)
    jgj = mat_mul(transpose(j0), mat_mul(gg, j0))
    g = [[rat(1, 2) * (gg[r][s] + jgj[r][s]) for s in range(dim)]
         for r in range(dim)]
    return algebra, validate_structure(dim, g, j0)


def class_instance(structure_class: str, seed_or_rng):
    """A random instance whose class predicate is guaranteed."""
    if structure_class == "abelian":
        return _paired_two_step(seed_or_rng, "abelian")
    if structure_class == "anti_abelian":
        return _paired_two_step(seed_or_rng, "anti_abelian")
    if structure_class == "bi_invariant":
        return _paired_two_step(seed_or_rng, "bi_invariant")
    if structure_class == "anti_bi_invariant":
        return _paired_two_step(seed_or_rng, "anti_bi_invariant")
    raise ValueError("unknown structure class %r" % structure_class)


def aff_c_bi_invariant():
    """The complex affine algebra over R: bi-invariant J, not unimodular."""
    n = 4
    c = [[[0] * n for _ in range(n)] for _ in range(n)]

    def setb(i, j, vec):
        for k, x in enumerate(vec):
            c[i][j][k] = x
            c[j][i][k] = -x

    setb(0, 2, [0, 0, 1, 0])
    setb(0, 3, [0, 0, 0, 1])
    setb(1, 2, [0, 0, 0, 1])
    setb(1, 3, [0, 0, -1, 0])
    algebra = LieAlgebra.from_structure_constants(n, c)
    return algebra, validate_structure(n, identity_matrix(n), standard_j(n))


def _maybe_float(algebra, structure, mode: str):
    if mode == "float":
        return algebra.to_float(), structure.to_float()
    return algebra, structure


# ---------------------------------------------------------------------------
# suites


def theorem1_suite(spec: SampleSpec) -> SuiteReport:
    """Chern Ricci-flatness on random 2-step instances, the cosymplectic
    biconditional at t != 1, and the 2-step closed form."""
    if spec.step > 2:
        raise ValueError("the 2-step theorem suite needs step <= 2")
    if spec.dim < 4:
        raise ValueError("random sampling needs dim >= 4")
    report = SuiteReport("theorem1", spec)
    rng = random.Random(spec.seed)
    eps = spec.eps if spec.mode == "float" else None
    for index in range(spec.count):
        algebra = random_nilpotent(spec.dim, spec.step, rng)
        structure = random_compatible_structure(algebra, rng.getrandbits(32))
        algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
        ok = True
        check = None
        q = codifferential_pairing(algebra_r, structure_r)
        cosymplectic = vec_is_zero(q, eps)
        for t in T_SWEEP:
            rho_theta = ricci_via_theta(algebra_r, structure_r, t, q=q, eps=eps)
            if t == 1:
                conn = canonical_connection(algebra_r, structure_r, t)
                rho_curv = ricci_via_curvature(
                    algebra_r, structure_r, conn, t, eps=eps
                )
                report.bump_residual(rho_curv.rho_hat.max_abs())
                report.bump_residual(rho_theta.rho_hat.max_abs())
                if not (
                    rho_curv.rho_hat.is_zero_form(eps)
                    and rho_theta.rho_hat.is_zero_form(eps)
                ):
                    ok, check = False, "chern_ricci_flat"
                    break
            else:
                if rho_theta.rho_hat.is_zero_form(eps) != cosymplectic:
                    ok, check = False, "cosymplectic_biconditional"
                    break
            closed = two_step_ricci(algebra_r, structure_r, t, q=q, eps=eps)
            if not closed.rho_hat.equals(rho_theta.rho_hat, eps):
                ok, check = False, "two_step_closed_form"
                break
        report.record(
            index, spec.dim, ok, check,
            None if ok else _witness(algebra, structure, t=str(t)),
        )
    return report


def corollary33_suite(spec: SampleSpec) -> SuiteReport:
    """Cosymplectic structures have a t-independent Ricci form."""
    if spec.dim < 4:
        raise ValueError("random sampling needs dim >= 4")
    report = SuiteReport("corollary33", spec)
    rng = random.Random(spec.seed)
    eps = spec.eps if spec.mode == "float" else None
    samples = [
        kodaira_thurston_cosymplectic(),
        iwasawa_balanced(),
        solvable_e11_cosymplectic(),
        euclidean_e2_flat(),
        (LieAlgebra.abelian(spec.dim),
         random_compatible_structure(spec.dim, spec.seed + 1)),
    ]
    while len(samples) < spec.count:
        dim = spec.dim if spec.dim in _AK_BASES else 4
        samples.append(random_cosymplectic_two_step(dim, rng))
    for index, (algebra, structure) in enumerate(samples[: spec.count]):
        algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
        q = codifferential_pairing(algebra_r, structure_r)
        om = omega_form(structure_r)
        delta = codifferential(algebra_r, structure_r, om)
        ok = True
        check = None
        if not delta.is_zero_form(eps):
            ok, check = False, "sample_not_cosymplectic"
        else:
            rhos = [
                ricci_via_theta(algebra_r, structure_r, t, q=q, eps=eps)
                for t in T_SWEEP
            ]
            base = rhos[0].rho_hat
            for other in rhos[1:]:
                report.bump_residual((other.rho_hat - base).max_abs())
                if not other.rho_hat.equals(base, eps):
                    ok, check = False, "ricci_depends_on_t"
                    break
        report.record(index, algebra.dim, ok, check,
                      None if ok else _witness(algebra, structure))
    # negative control: a non-cosymplectic witness must show t-dependence
    algebra, structure = kodaira_thurston_standard()
    algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
    rho0 = ricci_via_theta(algebra_r, structure_r, 0, eps=eps)
    rho2 = ricci_via_theta(algebra_r, structure_r, 2, eps=eps)
    distinct = not rho0.rho_hat.equals(rho2.rho_hat, eps)
    report.record(len(report.verdicts), 4, distinct, "negative_control",
                  None if distinct else _witness(algebra, structure))
    return report


def prop42_suite(spec: SampleSpec) -> SuiteReport:
    """Closed Ricci forms for the four special structure classes."""
    report = SuiteReport("prop42", spec)
    rng = random.Random(spec.seed)
    eps = spec.eps if spec.mode == "float" else None
    flag_of = {
        "bi_invariant": "bi_invariant",
        "anti_bi_invariant": "anti_bi_invariant",
        "abelian": "abelian_J",
        "anti_abelian": "anti_abelian_J",
    }
    index = 0
    per_class = max(1, spec.count // 4)
    for structure_class in (
        "bi_invariant", "anti_bi_invariant", "abelian", "anti_abelian"
    ):
        for _ in range(per_class):
            algebra, structure = class_instance(structure_class, rng)
            algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
            ok = True
            check = None
            flags = class_predicates(algebra_r, structure_r, eps)
            if not flags[flag_of[structure_class]]:
                ok, check = False, "class_predicate"
            else:
                q = codifferential_pairing(algebra_r, structure_r)
                unimodular = algebra_r.is_unimodular(eps)
                for t in T_SWEEP:
                    try:
                        rho = class_formula_ricci(
                            algebra_r, structure_r, t, structure_class,
                            q=q, eps=eps,
                        )
                    except AssertionError:
                        ok, check = False, "class_formula_vs_theta"
                        break
                    report.bump_residual(rho.rho_hat.max_abs()
                                         if structure_class != "abelian" else 0)
                    if (
                        unimodular
                        and structure_class != "abelian"
                        and not rho.rho_hat.is_zero_form(eps)
                    ):
                        ok, check = False, "unimodular_ricci_flat"
                        break
                if ok and structure_class == "abelian" and unimodular:
                    # rho^t = 0 at some t != 1 iff cosymplectic; record the
                    # t = 0 and t = 1 behavior separately
                    om = omega_form(structure_r)
                    cosym = codifferential(
                        algebra_r, structure_r, om
                    ).is_zero_form(eps)
                    rho0 = ricci_via_theta(algebra_r, structure_r, 0,
                                           eps=eps)
                    rho1 = ricci_via_theta(algebra_r, structure_r, 1,
                                           eps=eps)
                    if rho0.rho_hat.is_zero_form(eps) != cosym:
                        ok, check = False, "abelian_cosymplectic_iff"
                    elif not rho1.rho_hat.is_zero_form(eps):
                        ok, check = False, "abelian_chern_flat"
            report.record(index, algebra.dim, ok, check,
                          None if ok else _witness(algebra, structure))
            index += 1
    # non-unimodular bi-invariant control: formulas agree, no flatness claim
    algebra, structure = aff_c_bi_invariant()
    algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
    ok = True
    try:
        for t in T_SWEEP:
            class_formula_ricci(algebra_r, structure_r, t, "bi_invariant",
                                eps=eps)
    except AssertionError:
        ok = False
    report.record(index, 4, ok, "bi_invariant_formula_non_unimodular",
                  None if ok else _witness(algebra, structure))
    return report


def consistency_suite(spec: SampleSpec) -> SuiteReport:
    """Cross-validation battery on unimodular (not necessarily nilpotent)
    instances: theta routes, kappa proportionality, Hermitian gates, torsion
    types, affinity in t, d^2 = 0, codifferential adjointness and the two
    cosymplectic characterizations."""
    if spec.dim < 4:
        raise ValueError("random sampling needs dim >= 4")
    report = SuiteReport("consistency", spec)
    rng = random.Random(spec.seed)
    eps = spec.eps if spec.mode == "float" else None
    curated = [
        kodaira_thurston_standard(),
        kodaira_thurston_cosymplectic(),
        solvable_e11_cosymplectic(),
        euclidean_e2_flat(),
        compact_so3_example(),
        iwasawa_balanced(),
        three_step_example(),
        class_instance("anti_bi_invariant", rng),
    ]
    samples = list(curated)
    while len(samples) < spec.count:
        draw = rng.random()
        if draw < 0.4:
            algebra = random_nilpotent(spec.dim, spec.step, rng)
            structure = random_compatible_structure(
                algebra, rng.getrandbits(32)
            )
            samples.append((algebra, structure))
        elif draw < 0.7:
            base = curated[rng.randrange(5)]
            samples.append(transport_instance(*base, rng))
        else:
            dim = spec.dim if spec.dim in _AK_BASES else 4
            samples.append(random_cosymplectic_two_step(dim, rng))
    for index, (algebra, structure) in enumerate(samples[: spec.count]):
        algebra_r, structure_r = _maybe_float(algebra, structure, spec.mode)
        ok, check = _consistency_checks(
            report, algebra_r, structure_r, rng, eps
        )
        observations = None
        if ok and not (algebra_r.is_two_step(eps) or algebra_r.is_abelian(eps)):
            # outside the 2-step theorems the Chern Ricci form may be
            # nonzero; record it, never assert it
            rho1 = ricci_via_theta(algebra_r, structure_r, 1, eps=eps)
            observations = {
                "chern_ricci_max_abs": to_float(rho1.rho_hat.max_abs())
            }
        report.record(index, algebra.dim, ok, check,
                      None if ok else _witness(algebra, structure),
                      observations)
    return report


def _consistency_checks(report, algebra, structure, rng, eps):
    n = algebra.dim
    q = codifferential_pairing(algebra, structure)
    frame = unitary_frame(structure)
    om = omega_form(structure)

    # d^2 = 0 on a random 1-form and on omega
    alpha = KForm(n, 1, {(i,): rng.randint(-3, 3) for i in range(n)})
    if not ce_differential(
        algebra, ce_differential(algebra, alpha)
    ).is_zero_form(eps):
        return False, "d_squared_one_form"
    if not ce_differential(
        algebra, ce_differential(algebra, om)
    ).is_zero_form(eps):
        return False, "d_squared_omega"

    # codifferential adjointness over the 1-form basis
    delta_om = codifferential(algebra, structure, om)
    for i in range(n):
        basis_form = KForm(n, 1, {(i,): 1})
        lhs = form_inner_product(structure, delta_om, basis_form)
        rhs = form_inner_product(
            structure, om, ce_differential(algebra, basis_form)
        )
        if algebra.is_unimodular(eps) and not is_zero(lhs - rhs, eps):
            return False, "codifferential_adjointness"

    # two cosymplectic characterizations agree
    m = n // 2
    top = ce_differential(algebra, omega_power(structure, m - 1))
    if delta_om.is_zero_form(eps) != top.is_zero_form(eps):
        return False, "cosymplectic_equivalence"

    flags = class_predicates(algebra, structure, eps)

    family = CanonicalFamily(algebra, structure, frame)
    conns = {}
    for t in T_SWEEP:
        conn = family.connection(t)
        conns[t] = conn
        gates = hermitian_check(algebra, structure, conn)
        if not (is_zero(gates["grad_g_norm"], eps)
                and is_zero(gates["grad_J_norm"], eps)):
            return False, "hermitian_gates_t_%s" % t

    # affinity: Gamma^t = Gamma^0 + t (Gamma^1 - Gamma^0)
    g0, g1, g2 = conns[0].gamma, conns[1].gamma, conns[2].gamma
    for i in range(n):
        for j in range(n):
            for k in range(n):
                want = g0[i][j][k] + 2 * (g1[i][j][k] - g0[i][j][k])
                if not is_zero(g2[i][j][k] - want, eps):
                    return False, "affine_in_t"

    # quasi-Kahler: the line degenerates
    if flags["quasi_kahler"]:
        for t in (-1, 1, 2):
            if not all(
                is_zero(conns[t].gamma[i][j][k] - conns[0].gamma[i][j][k], eps)
                for i in range(n) for j in range(n) for k in range(n)
            ):
                return False, "quasi_kahler_degeneration"

    # torsion types: T11 at t=1, T20 at t=0, T11b at t=0, the calibrated
    # (T_b)^{1,1} = -(t/2) (d^c omega)^+(1,1)-part identity for all t, and
    # the t-independent T^{0,2} = N/4 component
    c_plus, _ = plus_minus_split(
        structure, dc_operator(algebra, structure, om), frame
    )
    plus_dense = dense3(c_plus)
    half = rat(1, 2) if structure.is_exact() else 0.5
    jmat = [list(r) for r in structure.J]
    ginv = structure.g_inv
    cp11 = VectorValued2Form.zero(n)
    for i in range(n):
        for jdx in range(n):
            lowered = [
                half * (plus_dense[i][jdx][l] + sum(
                    jmat[a][i] * sum(
                        jmat[b][jdx] * plus_dense[a][b][l] for b in range(n)
                    )
                    for a in range(n)
                ))
                for l in range(n)
            ]
            cp11.comp[i][jdx] = mat_vec(ginv, lowered)
    nij = None
    t02_ref = None
    for t in T_SWEEP:
        tors = torsion(algebra, conns[t])
        types = torsion_type_report(structure, tors)
        report.bump_residual(types["norm_T11_b"] if t == 0 else 0)
        if t == 1 and not is_zero(types["norm_T11"], eps):
            return False, "chern_torsion_11"
        if t == 0 and not is_zero(types["norm_T20"], eps):
            return False, "first_canonical_torsion_20"
        if t == 0 and not is_zero(types["norm_T11_b"], eps):
            return False, "bianchi_11_at_0"
        t_b, _ = bc_split(structure, tors)
        _, tb11, _ = type_split_vv(structure, t_b)
        scaled = cp11.scale((-t) * half)
        diff = tb11 - scaled
        if not diff.is_zero_tensor(eps):
            return False, "bianchi_11_identity"
        t20, t11, t02 = type_split_vv(structure, tors)
        if t02_ref is None:
            t02_ref = t02
            if nij is None:
                nij = nijenhuis_tensor(algebra, structure)
            quarter = rat(1, 4) if structure.is_exact() else 0.25
            for i in range(n):
                for jdx in range(n):
                    for k in range(n):
                        if not is_zero(
                            t02.comp[i][jdx][k] - quarter * nij[i][jdx][k], eps
                        ):
                            return False, "torsion_02_vs_nijenhuis"
        elif not (t02 - t02_ref).is_zero_tensor(eps):
            return False, "torsion_02_constant"
        if flags["integrable"] and t == -1:
            if not is_zero(types["skew_defect"], eps):
                return False, "bismut_skew_torsion"

    # integrable reduction agrees with the full assembly
    if flags["integrable"]:
        for t in (-1, 2):
            reduced = canonical_connection_integrable(algebra, structure, t)
            if not all(
                is_zero(reduced.gamma[i][j][k] - conns[t].gamma[i][j][k], eps)
                for i in range(n) for j in range(n) for k in range(n)
            ):
                return False, "integrable_reduction"

    # theta routes and Ricci routes
    for t in T_SWEEP:
        th_trace = theta_trace(algebra, structure, t, q=q)
        th_real = theta_real(algebra, structure, t, frame=frame, q=q)
        th_cplx = theta_complex(algebra, structure, t, frame=frame, q=q)
        th_def = theta_of_connection(
            algebra, structure, conns[t], t, frame=frame, eps=eps
        )
        report.bump_residual((th_trace.vartheta - th_real.vartheta).max_abs())
        if not (
            th_trace.vartheta.equals(th_real.vartheta, eps)
            and th_real.vartheta.equals(th_cplx.vartheta, eps)
        ):
            return False, "theta_triple_agreement"
        if algebra.is_unimodular(eps) and not th_def.vartheta.equals(
            th_trace.vartheta, eps
        ):
            return False, "theta_definitional"
        rho_t = ricci_via_theta(algebra, structure, t, q=q, eps=eps)
        rho_c = ricci_via_curvature(
            algebra, structure, conns[t], t, frame=frame, eps=eps
        )
        scaled = rho_t.rho_hat.scale(CURVATURE_TRACE_KAPPA)
        report.bump_residual((rho_c.rho_hat - scaled).max_abs())
        if algebra.is_unimodular(eps) and not rho_c.rho_hat.equals(
            scaled, eps
        ):
            return False, "kappa_proportionality"
        if not ce_differential(algebra, rho_t.rho_hat).is_zero_form(eps):
            return False, "ricci_closed"

    # frame independence of theta
    shuffled = unitary_frame(structure, seed=rng.getrandbits(16))
    th_a = theta_complex(algebra, structure, 1, frame=frame, q=q)
    th_b = theta_complex(algebra, structure, 1, frame=shuffled, q=q)
    if not th_a.vartheta.equals(th_b.vartheta, eps):
        return False, "frame_independence"

    return True, None


SUITES = {
    "theorem1": theorem1_suite,
    "corollary33": corollary33_suite,
    "prop42": prop42_suite,
    "consistency": consistency_suite,
}


def run_suite(name: str, spec: SampleSpec) -> SuiteReport:
    if name not in SUITES:
        raise KeyError("unknown suite %r" % name)
    return SUITES[name](spec)
