"""
Stable critical points of the Allen–Cahn energy.

Finite-difference solvers for critical points of E_ε(u) = ∫ ε|∇u|²/2 + W(u)/ε,
stability certification by the smallest eigenvalue of the second variation, and
the geometric-measure diagnostics of the diffuse interface: varifold mass,
stationarity, discrepancy, second fundamental form density, monotonicity
ratios, slice curvature and junction turning angles.
"""
from . import example, field, harness, potential, slicing, solver, stability, varifold
from ._testit import test

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "example",
    "test",
    "potential",
    "field",
    "solver",
    "stability",
    "varifold",
    "slicing",
    "harness",
]
