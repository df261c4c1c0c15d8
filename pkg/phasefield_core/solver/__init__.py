"""
Critical points of the Allen-Cahn energy.

Residual and energy evaluation, semi-implicit gradient flow and Newton
refinement of phase states.
"""
from ._closure import Closure
from ._config import SolveConfig
from ._energy import energy, energy_gradient, residual
from ._flow import gradient_flow
from ._newton import newton_refine
from ._state import PhaseState

__all__ = [
    "Closure",
    "PhaseState",
    "SolveConfig",
    "energy",
    "energy_gradient",
    "gradient_flow",
    "newton_refine",
    "residual",
]
