"""Verification laboratory for curvature invariants of Cartan-Hartogs domains.

Truncated-jet automatic differentiation of closed-form Kahler potentials,
checked against exact curvature identities and an exact-rational catalog case
analysis whose outcome is that only the complex hyperbolic space (unit-ball
base, mu = 1) has constant second expansion coefficient a2.
"""

__version__ = "1.0.0"

from .jets import (BidegreeCap, Jet, MultiIndex, basis_exponents, extract_partial,
                   jet_add, jet_constant, jet_det, jet_log, jet_mul,
                   jet_real_power, jet_reciprocal, jet_sub, jet_variable)
from .domains import (DomainSpec, ExceptionalDomainError, contains,
                      dimension_genus, generic_norm_jet, generic_norm_value,
                      matrix_model, sample_interior, type1, type2, type3, type4,
                      exc5, exc6)
from .geometry import (CurvatureReport, HartogsPoint, HartogsSpec, MetricData,
                       a2_at, base_curvature_report, bergman_potential_jet,
                       bergman_r2_at_origin, curvature_report,
                       curvature_report_from_potential, curvature_tensor,
                       hartogs_contains, hartogs_potential_jet,
                       laplacian_scalar_curvature, metric_at, ricci_and_scalar,
                       sample_hartogs, scalar_curvature_at, tensor_norms)
from .oracles import (OracleInputs, R2_formula, a2_quadratic_coeffs,
                      appendix_R2_base, lap_k_formula, ric2_formula,
                      scalar_curvature_formula)
from .cases import (CaseVerdict, classify_all, constancy_constraints,
                    exceptional_integrality, integer_root_scan)

__all__ = [name for name in dir() if not name.startswith("_")]
