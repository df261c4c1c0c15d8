"""
Stability of critical points.

Second-variation quadratic form, smallest eigenvalue of the linearised
operator with Dirichlet closure, stability certification and the
B-weighted stability inequality.
"""
from ._certify import certify_stable, check_B_stability, default_slack
from ._eigen import EigenReport, min_eigenvalue
from ._form import quadratic_form

__all__ = [
    "EigenReport",
    "certify_stable",
    "check_B_stability",
    "default_slack",
    "min_eigenvalue",
    "quadratic_form",
]
