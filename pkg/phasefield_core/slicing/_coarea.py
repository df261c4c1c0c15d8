from numpy import asarray, cos, nonzero, ones, pi, sqrt, where, zeros

from .._util import check_positive
from ..field import gradient
from ..varifold import second_fundamental_density
from ._contour import extract_slice
from ._curve import curvature_integral


def level_surface_integral(u, t, f=None, mask=None, width=6, weights=None):
    """
    Co-area approximation of ∫_{u=t} f dH^{n−1}.

    The surface measure is regularised with the cosine kernel

        δ_η(r) = (1 + cos(πr/η))/(2η),   |r| < η,

    as ∫ f |∇u| δ_η(u − t) dx with η = width·h·max|∇u|, so the kernel spans
    about 2·width grid steps across the level set.

    Parameters
    ----------
    u : ScalarField
        Field.
    t : float
        Level.
    f : array_like, optional
        Integrand at every node; the area when omitted.
    mask : array_like of bool, optional
        Nodes to integrate over.
    width : float
        Kernel half-width in units of h·max|∇u|.
    weights : array_like, optional
        Quadrature weights of the nodes. Defaults to the trapezoidal weights of
        the grid.
    """
    grid = u.grid
    g = sqrt((gradient(u).values ** 2).sum(0))
    eta = width * grid.hmax * float(g.max())
    if eta == 0:
        return 0.0
    r = u.values - t
    kernel = where(abs(r) < eta, (1 + cos(pi * r / eta)) / (2 * eta), 0.0)
    if mask is not None:
        kernel = kernel * asarray(mask, bool)
    f = ones(grid.shape) if f is None else asarray(f, float)
    w = grid.weights if weights is None else asarray(weights, float)
    if w.shape != grid.shape:
        raise ValueError("The weights must have the shape of the grid.")
    return float((w * kernel * f * g).sum())


def slice_curvature_check(u, eps, t, fibers=None, verbose=False):
    """
    Both sides of the slice curvature estimate

        ∫_G dz ∫_{ℓ_z} |κ_z| ds ≤ (∫_{M_G} B² dH^{n−1})^{1/2} (H^{n−1}(M_G))^{1/2},

    where M = {u = t}, ℓ_z = M ∩ T₂⁻¹(z) and M_G = M ∩ T₂⁻¹(G).

    In three dimensions the fibers of G share one trapezoidal rule, with halved
    weights at both ends of G, for the slice quadrature on the left and the
    surface integrals on the right.

    Parameters
    ----------
    u : ScalarField
        Field on a grid of dimension two or three.
    eps : float
        Interface width ε; bounds the curve resampling step.
    t : float
        Regular level.
    fibers : tuple, optional
        Interval (low, high) of fiber coordinates forming G in three
        dimensions. Defaults to all fibers. Two-dimensional grids have a single
        fiber of unit weight.

    Returns
    -------
    lhs : float
        Fiber quadrature of the total slice curvature.
    rhs : float
        Product of the square roots of the B² surface integral and the area.
    """
    from tqdm import tqdm

    eps = check_positive(eps, "eps")
    grid = u.grid
    if grid.n not in (2, 3):
        raise ValueError("The slice curvature check needs two or three dimensions.")

    if grid.n == 2:
        zs = [None]
        zweights = [1.0]
        weights = grid.weights
    else:
        zw = _fiber_weights(grid, fibers)
        keep = zw > 0
        zs = [(float(z),) for z in grid.axes[2][keep]]
        zweights = list(zw[keep])
        weights = grid.axis_weights(0) * grid.axis_weights(1) * zw.reshape(1, 1, -1)
    if len(zs) == 0:
        return 0.0, 0.0

    lhs = 0.0
    for z, w in tqdm(list(zip(zs, zweights)), desc="Slices", disable=not verbose):
        curves = extract_slice(u, t, z)
        lhs += w * sum(curvature_integral(c, eps) for c in curves if len(c) >= 3)

    area = level_surface_integral(u, t, weights=weights)
    if area == 0:
        return 0.0, 0.0
    B = second_fundamental_density(u)
    bint = level_surface_integral(u, t, f=B**2, weights=weights)
    return float(lhs), float(sqrt(bint) * sqrt(area))


def _fiber_weights(grid, fibers):
    """
    Trapezoidal weights of the fiber nodes in G, zero outside G.
    """
    z = grid.axes[2]
    h = grid.h[2]
    if fibers is None:
        return grid.axis_weights(2).ravel().copy()
    low, high = fibers
    tol = 1e-9 * h
    inside = (z >= low - tol) & (z <= high + tol)
    w = zeros(len(z))
    idx = nonzero(inside)[0]
    if len(idx) == 1:
        w[idx] = grid.axis_weights(2).ravel()[idx]
    elif len(idx) > 1:
        w[idx] = h
        w[idx[0]] = w[idx[-1]] = h / 2
    return w
