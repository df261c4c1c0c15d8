"""
Diffuse varifolds of phase fields.

Weight measure, first variation, discrepancy, the second fundamental form
density B and its measure ν, the discrepancy gradient bound, monotonicity
ratios and the assembled diagnostics report.
"""
from ._matrix import matrix_inequality_check
from ._monotonicity import MonotonicityTable
from ._report import DiagnosticsReport, diagnose
from ._second import second_fundamental_density
from ._varifold import DiffuseVarifold, unit_ball_volume

__all__ = [
    "DiagnosticsReport",
    "DiffuseVarifold",
    "MonotonicityTable",
    "diagnose",
    "matrix_inequality_check",
    "second_fundamental_density",
    "unit_ball_volume",
]
