from numpy import exp, where

from .._util import check_point, check_positive
from ._field import ScalarField, VectorField


def bump(grid, center, radius):
    """
    Smooth bump exp(1 − 1/(1 − ρ²)) with ρ = |x − center|/radius, zero for ρ ≥ 1.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid, bump
        >>>
        >>> grid = Grid([(-1.0, 1.0)], (21,))
        >>> print(bump(grid, [0.0], 0.5).values[10])
        1.0
    """
    center = check_point(center, grid.n, "center")
    radius = check_positive(radius, "radius")
    rho2 = sum((m - c) ** 2 for m, c in zip(grid.mesh, center)) / radius**2
    inside = rho2 < 1
    safe = where(inside, rho2, 0.0)
    return ScalarField(grid, where(inside, exp(1 - 1 / (1 - safe)), 0.0))


def _random_ball(grid, random, min_frac, max_frac):
    ext = grid.high - grid.low
    radius = random.uniform(min_frac, max_frac) * ext.min()
    margin = radius + 2 * grid.hmax
    center = [random.uniform(lo + margin, hi - margin) for lo, hi in zip(grid.low, grid.high)]
    return center, radius


def random_bumps(grid, count, random, min_frac=0.1, max_frac=0.3):
    """
    Compactly supported smooth functions vanishing near the boundary ring.

    Each function is a scaled bump whose support stays at least two nodes away
    from every face.

    Parameters
    ----------
    grid : Grid
        Sampling grid.
    count : int
        Number of functions.
    random : numpy.random.RandomState
        Random source.
    """
    out = []
    for _ in range(count):
        center, radius = _random_ball(grid, random, min_frac, max_frac)
        amp = random.normal()
        out.append(ScalarField(grid, amp * bump(grid, center, radius).values))
    return out


def random_vector_fields(grid, count, random, min_frac=0.1, max_frac=0.3):
    """
    Compactly supported smooth vector fields g = χ·(a + A(x − c)/r).
    """
    n = grid.n
    out = []
    for _ in range(count):
        center, radius = _random_ball(grid, random, min_frac, max_frac)
        chi = bump(grid, center, radius).values
        a = random.normal(size=n)
        A = random.normal(size=(n, n))
        comps = []
        for i in range(n):
            lin = sum(A[i, j] * (grid.mesh[j] - center[j]) / radius for j in range(n))
            comps.append(chi * (a[i] + lin))
        out.append(VectorField(grid, comps))
    return out
