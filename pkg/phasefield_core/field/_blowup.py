from numpy import asarray

from .._util import check_point, check_positive
from ._field import ScalarField


def blowup(u, eps, y, rho, target):
    """
    Rescaled field ũ(x̃) = u(ρx̃ + y) paired with ε̃ = ε/ρ.

    This is the pull-back of u under the blow-up map η_{y,ρ}(x) = (x − y)/ρ.
    Values are resampled on ``target`` by cubic spline interpolation.

    Parameters
    ----------
    u : ScalarField
        Source field.
    eps : float
        Interface scale of ``u``.
    y : array_like
        Blow-up center.
    rho : float
        Blow-up radius.
    target : Grid
        Grid of the rescaled field, in rescaled coordinates.

    Returns
    -------
    ScalarField
        ũ on ``target``.
    float
        ε̃ = ε/ρ.
    """
    from scipy.ndimage import map_coordinates

    grid = u.grid
    eps = check_positive(eps, "eps")
    rho = check_positive(rho, "rho")
    y = check_point(y, grid.n, "y")
    if target.n != grid.n:
        raise ValueError("The target grid must have the dimension of the source grid.")

    low = rho * target.low + y
    high = rho * target.high + y
    if not grid.contains(low, high, tol=1e-10):
        raise ValueError("The blow-up preimage escapes the source box.")

    pts = rho * target.points + y
    coords = asarray([(pts[:, a] - grid.low[a]) / h for a, h in enumerate(grid.h)])
    vals = map_coordinates(u.values, coords, order=3, mode="mirror")
    return ScalarField(target, vals.reshape(target.shape)), eps / rho
