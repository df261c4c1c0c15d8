from .._util import check_boundary_zero
from ..field import ScalarField, staggered_gradient_energy


def quadratic_form(s, phi):
    """
    Second variation of the energy in the direction φ,

        Q(φ) = ∫ ε|∇φ|² + W″(u)/ε φ² dx.

    The gradient term uses the same edge differences as the energy, so for a
    discrete Dirichlet eigenfield ψ of the linearised operator Q(ψ) = λ‖ψ‖²
    holds exactly.

    Parameters
    ----------
    s : PhaseState
        State u.
    phi : ScalarField or array_like
        Test function vanishing on the outermost ring of nodes.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.example import constant_state
        >>> from phasefield_core.field import bump
        >>> from phasefield_core.stability import quadratic_form
        >>>
        >>> s = constant_state(1.0, n=1, eps=0.1)
        >>> print(quadratic_form(s, bump(s.grid, [0.5], 0.3)) > 0)
        True
    """
    grid = s.grid
    values = phi.values if isinstance(phi, ScalarField) else phi
    values = check_boundary_zero(values).reshape(grid.shape)
    phi = ScalarField(grid, values)

    grad = 2 * staggered_gradient_energy(phi)
    curv = s.well.second_derivative(s.u.values) / s.eps
    return float(s.eps * grad + (grid.weights * curv * values**2).sum())
