from ..field import ScalarField


def residual(s):
    """
    Euler-Lagrange residual −εΔₕu + W′(u)/ε of a state.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.example import constant_state
        >>> from phasefield_core.solver import residual
        >>>
        >>> print(residual(constant_state(1.0)).sup())
        0.0
    """
    return s.residual


def energy(s, region=None):
    """
    Energy E_ε(u) = ∫ ε|∇u|²/2 + W(u)/ε over ``region``.

    The gradient term is integrated on grid edges and the potential term with
    trapezoidal weights, so that ∂Eₕ/∂uᵢ = wᵢ·Rᵢ holds exactly for the Neumann
    closure; see :func:`energy_gradient`.
    """
    return s.energy(region)


def energy_gradient(s):
    """
    Gradient of the discrete energy with respect to the node values, w·R.
    """
    return ScalarField(s.grid, s.grid.weights * s.residual.values)
