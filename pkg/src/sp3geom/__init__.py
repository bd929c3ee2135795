"""Exact and numeric geometry of the lagrangian grassmannian Sigma = LG(3, 6) in
P^13 and of its genus-9 Fano linear sections."""

from .algebra import LinSubspace, SymMat3, TernaryForm, interpolate_ternary_form
from .fano import (DualQuartic, FanoSection, conic_on_X, dual_quartic,
                   is_smooth_quartic, macaulay_resultant, pivot_curve,
                   random_section, sample_curve, section_through_line,
                   vertex_surface)
from .incidence import (SigmaLine, axis_of_line, conic_vertex, line_from_axis,
                        quadric_span, vertex_conic)
from .numeric import NumPoint, num_eval, num_residual, roots_univariate
from .projection import double_project, in_base_locus, projection_center
from .quartic import (F_eval, F_grad, OrbitClass, classify_orbit,
                      cone_membership, hat_pivot, tangent_space)
from .sp3 import (Point13, correlation_J, exp_map, is_on_sigma, plane_of,
                  plucker, rho_wedge3, sigma_residual, symplectic_completion,
                  symplectic_gram)

__version__ = "0.1.0"

__all__ = [
    "LinSubspace", "SymMat3", "TernaryForm", "interpolate_ternary_form",
    "DualQuartic", "FanoSection", "conic_on_X", "dual_quartic", "is_smooth_quartic",
    "macaulay_resultant", "pivot_curve", "random_section", "sample_curve",
    "section_through_line", "vertex_surface",
    "SigmaLine", "axis_of_line", "conic_vertex", "line_from_axis", "quadric_span", "vertex_conic",
    "NumPoint", "num_eval", "num_residual", "roots_univariate",
    "double_project", "in_base_locus", "projection_center",
    "F_eval", "F_grad", "OrbitClass", "classify_orbit", "cone_membership", "hat_pivot", "tangent_space",
    "Point13", "correlation_J", "exp_map", "is_on_sigma", "plane_of", "plucker", "rho_wedge3",
    "sigma_residual", "symplectic_completion", "symplectic_gram",
]
