from dataclasses import asdict, dataclass
from typing import Optional

from numpy import linspace

from ._closure import BOUNDARIES


@dataclass(frozen=True)
class SolveConfig:
    """
    Parameters of the semilinear solve.

    Attributes
    ----------
    flow_step : float, optional
        Initial semi-implicit step τ. Defaults to ε/max|W″| over [−1, 1].
    max_flow_iters : int
        Maximum number of accepted flow steps.
    flow_tol : float
        Residual sup-norm at which the flow hands over to Newton.
    newton_tol : float
        Residual sup-norm at which Newton stops.
    newton_max_iters : int
        Maximum number of Newton steps.
    linear_tol : float
        Relative tolerance of the inner linear solves.
    boundary : str
        ``"neumann"`` or ``"periodic"``.
    checkpoint_every : int
        Write a field checkpoint every k flow iterations (``0`` disables).
    """

    flow_step: Optional[float] = None
    max_flow_iters: int = 2000
    flow_tol: float = 1e-3
    newton_tol: float = 1e-9
    newton_max_iters: int = 20
    linear_tol: float = 1e-10
    boundary: str = "neumann"
    checkpoint_every: int = 0

    def __post_init__(self):
        if self.flow_step is not None and not self.flow_step > 0:
            raise ValueError("`flow_step` must be positive.")
        for name in ["flow_tol", "newton_tol", "linear_tol"]:
            if not getattr(self, name) > 0:
                raise ValueError(f"`{name}` must be positive.")
        for name in ["max_flow_iters", "newton_max_iters"]:
            if getattr(self, name) < 0:
                raise ValueError(f"`{name}` must be nonnegative.")
        if self.checkpoint_every < 0:
            raise ValueError("`checkpoint_every` must be nonnegative.")
        if self.boundary not in BOUNDARIES[:2]:
            raise ValueError("`boundary` must be 'neumann' or 'periodic'.")

    def step(self, eps, well):
        """
        Initial flow step for interface scale ``eps``.
        """
        if self.flow_step is not None:
            return self.flow_step
        curv = abs(well.second_derivative(linspace(-1, 1, 201))).max()
        return eps / curv

    def to_dict(self):
        return asdict(self)
