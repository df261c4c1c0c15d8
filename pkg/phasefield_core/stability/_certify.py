import warnings

from .._util import check_boundary_zero
from ..field import ScalarField, gradient
from ._eigen import min_eigenvalue


def default_slack(s):
    """
    Certification slack 10⁻³·W″(1)/ε.
    """
    return 1e-3 * float(s.well.second_derivative(1.0)) / s.eps


def certify_stable(s, slack=None, verbose=False):
    """
    Decide whether a state is stable: λ_min ≥ −slack.

    The translation quasi-kernel of an interface has an exponentially small
    eigenvalue that discretisation perturbs at O(h²); the default slack
    10⁻³·W″(1)/ε absorbs that perturbation at every ε.

    The outcome is written to ``s.certified_stable`` together with
    ``s.lambda_min`` and ``s.eigen_report``.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.example import constant_state
        >>> from phasefield_core.stability import certify_stable
        >>>
        >>> print(certify_stable(constant_state(1.0, n=2, eps=0.1)))
        True
        >>> print(certify_stable(constant_state(0.0, n=2, eps=0.1)))
        False
    """
    if s.converged is False:
        warnings.warn("Certifying a state that did not converge.", UserWarning)
    if slack is None:
        slack = default_slack(s)

    report = min_eigenvalue(s, verbose=verbose)
    stable = report.lambda_min >= -slack
    s.certified_stable = bool(stable)
    s.lambda_min = report.lambda_min
    s.eigen_report = report
    return bool(stable)


def check_B_stability(s, phi):
    """
    Both sides of the stability inequality

        ∫ B²|∇u|²φ² dx ≤ ∫ |∇φ|²|∇u|² dx

    satisfied by stable critical points.

    Parameters
    ----------
    s : PhaseState
        Certified state. It is certified first if it never was.
    phi : ScalarField or array_like
        Test function vanishing on the outermost ring of nodes.

    Returns
    -------
    lhs : float
        ∫ B²|∇u|²φ².
    rhs : float
        ∫ |∇φ|²|∇u|².
    """
    from ..varifold import second_fundamental_density

    grid = s.grid
    values = phi.values if isinstance(phi, ScalarField) else phi
    values = check_boundary_zero(values).reshape(grid.shape)

    if s.certified_stable is None:
        certify_stable(s)
    if not s.certified_stable:
        raise ValueError("The stability inequality needs a certified stable state.")

    grad2 = (gradient(s.u).values ** 2).sum(0)
    B = second_fundamental_density(s.u)
    dphi2 = (gradient(ScalarField(grid, values)).values ** 2).sum(0)
    w = grid.weights
    lhs = float((w * B**2 * grad2 * values**2).sum())
    rhs = float((w * dphi2 * grad2).sum())
    return lhs, rhs
