from functools import cached_property

from .._util import check_positive, format_object
from ..field import ScalarField, integrate, staggered_gradient_energy
from ._closure import Closure


class PhaseState:
    """
    Candidate critical point (u, ε, W) of the energy

        E_ε(u) = ∫ ε|∇u|²/2 + W(u)/ε dx.

    The state is immutable; :meth:`evolve` returns a new state with new values,
    so the cached residual always belongs to ``u``. Certification results are
    attached by :func:`phasefield_core.stability.certify_stable`.

    Parameters
    ----------
    u : ScalarField
        Phase field.
    eps : float
        Interface scale ε, in grid length units.
    well : DoubleWell
        Potential.
    boundary : str
        Boundary closure of the Laplacian, ``"neumann"`` or ``"periodic"``.
    c2 : float
        Bound on sup|u|.
    """

    def __init__(self, u, eps, well, boundary="neumann", c2=2.0, converged=None, status=None):
        if not isinstance(u, ScalarField):
            raise ValueError("`u` must be a ScalarField.")
        self._u = u
        self._eps = check_positive(eps, "eps")
        self._well = well
        self._closure = Closure(u.grid, boundary)
        self._c2 = check_positive(c2, "c2")
        if u.sup() > self._c2:
            raise ValueError(f"The phase field exceeds the bound sup|u| <= {self._c2}.")
        self.converged = converged
        self.status = status
        self.history = ()
        self.certified_stable = None
        self.lambda_min = None
        self.eigen_report = None

    @property
    def u(self):
        return self._u

    @property
    def grid(self):
        return self._u.grid

    @property
    def eps(self):
        return self._eps

    @property
    def well(self):
        return self._well

    @property
    def boundary(self):
        return self._closure.kind

    @property
    def closure(self):
        return self._closure

    @property
    def c2(self):
        return self._c2

    def evolve(self, values, converged=None, status=None):
        """
        New state with phase-field values ``values``.
        """
        u = self._u.evolve(values)
        return PhaseState(u, self._eps, self._well, self.boundary, self._c2, converged, status)

    @cached_property
    def residual(self):
        """
        Euler-Lagrange residual −εΔₕu + W′(u)/ε.
        """
        v = self._u.values
        lap = self._closure.extend(self._closure.laplacian(self._closure.reduce(v)))
        return ScalarField(self.grid, -self._eps * lap + self._well.derivative(v) / self._eps)

    @cached_property
    def residual_norm(self):
        """
        Sup norm of the residual.
        """
        return self.residual.sup()

    def energy(self, region=None):
        """
        E_ε over ``region`` (default: the whole box).
        """
        eps = self._eps
        grad = staggered_gradient_energy(self._u, region)
        bulk = integrate(ScalarField(self.grid, self._well.value(self._u.values) / eps), region)
        return eps * grad + bulk

    def __str__(self):
        params = {"eps": self._eps, "well": self._well.kind, "boundary": self.boundary}
        attrs = [
            ("shape", self.grid.shape),
            ("residual_norm", f"{self.residual_norm:.3e}"),
            ("status", self.status),
        ]
        if self.lambda_min is not None:
            attrs.append(("lambda_min", f"{self.lambda_min:.6g}"))
        return format_object(self, params, attrs)
