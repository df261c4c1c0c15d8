from .check import check_boundary_zero, check_finite, check_point, check_positive
from .format import format_object
from .solve import indefinite_solve, spd_solve

__all__ = [
    "check_boundary_zero",
    "check_finite",
    "check_point",
    "check_positive",
    "format_object",
    "indefinite_solve",
    "spd_solve",
]
