"""Canonical Hermitian connections and Ricci forms on Lie algebras.

The package computes, in exact rational (or float) arithmetic:

  * Lie algebra invariants from structure constants (series, center,
    unimodularity) with a parser for the compact structure-equation
    notation such as "(0,0,0,12)";
  * almost Hermitian structures (g, J, omega), Nijenhuis tensor and the
    structure-class predicates;
  * Chevalley-Eilenberg exterior calculus: d, codifferential, J action,
    d^c, type decompositions of 3-forms and vector-valued 2-forms;
  * the Levi-Civita connection and the one-parameter family of canonical
    Hermitian connections with torsion-type diagnostics;
  * the one-forms theta^t by three independent formulas and the Ricci
    forms rho^t by the d-theta and curvature-trace routes;
  * batch verification suites for the Ricci-flatness theorems on 2-step
    nilpotent algebras.
"""

__version__ = "0.1.0"

from .algebra import JacobiError, LieAlgebra
from .calculus import (
    KForm,
    VectorValued2Form,
    adjoint_codifferential,
    bc_split,
    ce_differential,
    codifferential,
    dc_operator,
    flat,
    form_inner_product,
    interior_product,
    j_on_forms,
    mean_curvature_vector,
    omega_form,
    omega_power,
    plus_minus_split,
    sharp,
    type_split_vv,
    wedge,
)
from .classify import class_predicates
from .connections import (
    CanonicalFamily,
    Connection,
    canonical_connection,
    canonical_connection_integrable,
    first_canonical_by_projection,
    hermitian_check,
    levi_civita,
    torsion,
    torsion_type_report,
)
from .documents import (
    DocumentError,
    load_problem,
    problem_from_dict,
    problem_to_dict,
    save_problem,
    save_report,
)
from .notation import NotationError, parse_notation, serialize_notation
from .ricci import (
    CURVATURE_TRACE_KAPPA,
    NonHermitianConnection,
    RicciForm,
    Theta,
    class_formula_ricci,
    codifferential_pairing,
    curvature,
    curvature_operators,
    ricci_via_curvature,
    ricci_via_theta,
    theta_complex,
    theta_of_connection,
    theta_real,
    theta_trace,
    two_step_ricci,
)
from .structures import (
    AlmostHermitianStructure,
    StructureError,
    UnitaryFrame,
    nijenhuis,
    nijenhuis_tensor,
    random_compatible_structure,
    standard_j,
    unitary_frame,
    validate_structure,
)
from .verify import (
    SampleSpec,
    SuiteReport,
    run_suite,
    random_two_step,
    transport_instance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
