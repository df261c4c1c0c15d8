from numpy import asarray, isscalar, nextafter

from .._util import check_finite
from ._curve import SliceCurve


def regular_level(u, t, gap=1e-10, maxtries=1000):
    """
    Nearby level with no node value within ``gap``.

    Candidates t, t + 3·gap, t − 3·gap, t + 6·gap, ... are tried in that
    order, after moving t up by one ulp.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.example import constant_state
        >>> from phasefield_core.slicing import regular_level
        >>>
        >>> print(regular_level(constant_state(0.5).u, 0.5) > 0.5)
        True
    """
    values = u.values if hasattr(u, "values") else check_finite(u)
    t = float(nextafter(float(t), float("inf")))
    for k in range(maxtries):
        sign = 1 if k % 2 == 1 else -1
        cand = t + sign * 3 * gap * ((k + 1) // 2)
        if not (abs(values - cand) <= gap).any():
            return float(cand)
    raise ValueError("Failed to find a regular level near the requested one.")


def fiber_index(grid, z):
    """
    Index of the fiber plane T₂⁻¹(z) among the grid nodes.

    Fibers are planes spanned by the first two axes; z lists the coordinates
    along the remaining axes and must match grid nodes.
    """
    if grid.n < 2:
        raise ValueError("Slicing needs at least two dimensions.")
    if z is None:
        z = ()
    z = [z] if isscalar(z) else list(asarray(z, float).ravel())
    if len(z) != grid.n - 2:
        raise ValueError(f"Fiber points must have {grid.n - 2} coordinates.")
    index = []
    for axis, value in enumerate(z, start=2):
        nodes = grid.axes[axis]
        k = int(abs(nodes - value).argmin())
        if abs(nodes[k] - value) > 1e-9 * grid.h[axis]:
            raise ValueError("Fiber points must lie on grid nodes.")
        index.append(k)
    return tuple(index)


def fiber_values(u, z=None):
    """
    Values of u on the fiber plane through z, shape (m₁, m₂).
    """
    index = fiber_index(u.grid, z)
    return u.values[(slice(None), slice(None)) + index]


def fiber_points(grid):
    """
    Fiber coordinates of every fiber plane, in row-major order.
    """
    from itertools import product

    fibers = product(*[grid.axes[a] for a in range(2, grid.n)])
    return [tuple(float(v) for v in f) for f in fibers]


# Corners in counter-clockwise order: 0=(i,j), 1=(i+1,j), 2=(i+1,j+1), 3=(i,j+1).
# Edge e joins corner e and corner (e+1) % 4.
_CORNERS = ((0, 0), (1, 0), (1, 1), (0, 1))


def _edge_key(i, j, e):
    if e == 0:
        return ("x", i, j)
    if e == 1:
        return ("y", i + 1, j)
    if e == 2:
        return ("x", i, j + 1)
    return ("y", i, j)


def _cell_segments(vals, center, t):
    above = [v > t for v in vals]
    crossing = [e for e in range(4) if above[e] != above[(e + 1) % 4]]
    if len(crossing) == 2:
        return [tuple(crossing)]
    if len(crossing) == 4:
        # Saddle: corners on the same side as the centre stay connected.
        if above[0] == (center > t):
            return [(0, 1), (2, 3)]
        return [(3, 0), (1, 2)]
    return []


def _crossing_point(values, axes, key, t):
    kind, i, j = key
    x, y = axes
    if kind == "x":
        v0, v1 = values[i, j], values[i + 1, j]
        s = (t - v0) / (v1 - v0)
        return (x[i] + s * (x[i + 1] - x[i]), y[j])
    v0, v1 = values[i, j], values[i, j + 1]
    s = (t - v0) / (v1 - v0)
    return (x[i], y[j] + s * (y[j + 1] - y[j]))


def _chains(links):
    seen = set()
    chains = []

    def walk(start):
        chain = [start]
        seen.add(start)
        while True:
            nxt = [k for k in links[chain[-1]] if k not in seen]
            if not nxt:
                return chain
            chain.append(nxt[0])
            seen.add(nxt[0])

    ends = sorted(k for k, v in links.items() if len(v) == 1)
    for k in ends:
        if k not in seen:
            chains.append((walk(k), False))
    for k in sorted(links):
        if k not in seen:
            chains.append((walk(k), True))
    return chains


def extract_slice(u, t, z=None):
    """
    Level curves {u = t} of the bilinear interpolant on one fiber plane.

    Marching squares on the fiber plane; saddle cells are resolved by the value
    of the bilinear interpolant at the cell centre. Curves are oriented with ∇u
    to their left.

    Parameters
    ----------
    u : ScalarField
        Field on a grid of dimension at least two.
    t : float
        Level, assumed regular (see :func:`regular_level`).
    z : array_like, optional
        Fiber coordinates along the axes beyond the second.

    Returns
    -------
    list of SliceCurve
        Empty when t lies outside the range of the fiber values.
    """
    grid = u.grid
    values = fiber_values(u, z)
    t = float(t)
    zt = () if z is None else tuple(float(v) for v in asarray(z, float).ravel())
    if not (values.min() < t < values.max()):
        return []

    axes = (grid.axes[0], grid.axes[1])
    above = values > t
    corner = above[:-1, :-1]
    m = (corner != above[1:, :-1]) | (corner != above[:-1, 1:]) | (corner != above[1:, 1:])

    links = {}
    for i, j in zip(*m.nonzero()):
        vals = [values[i + a, j + b] for a, b in _CORNERS]
        center = sum(vals) / 4
        for e0, e1 in _cell_segments(vals, center, t):
            k0, k1 = _edge_key(i, j, e0), _edge_key(i, j, e1)
            links.setdefault(k0, []).append(k1)
            links.setdefault(k1, []).append(k0)

    points = {k: _crossing_point(values, axes, k, t) for k in links}
    spacing = min(grid.h[0], grid.h[1])

    curves = []
    for chain, closed in _chains(links):
        verts = asarray([points[k] for k in chain])
        if verts.shape[0] < 2:
            continue
        path = chain + chain[:1] if closed else chain
        orient = 0.0
        for a, b in zip(path[:-1], path[1:]):
            pa, pb = points[a], points[b]
            gx, gy = _bilinear_gradient(values, axes, (pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
            orient += (pb[0] - pa[0]) * gy - (pb[1] - pa[1]) * gx
        if orient < 0:
            verts = verts[::-1]
        curves.append(SliceCurve(verts, t, zt, closed, spacing))
    return curves


def _bilinear_gradient(values, axes, px, py):
    x, y = axes
    i = min(max(int((px - x[0]) / (x[1] - x[0])), 0), len(x) - 2)
    j = min(max(int((py - y[0]) / (y[1] - y[0])), 0), len(y) - 2)
    sx = (px - x[i]) / (x[i + 1] - x[i])
    sy = (py - y[j]) / (y[j + 1] - y[j])
    v00, v10 = values[i, j], values[i + 1, j]
    v01, v11 = values[i, j + 1], values[i + 1, j + 1]
    gx = ((v10 - v00) * (1 - sy) + (v11 - v01) * sy) / (x[i + 1] - x[i])
    gy = ((v01 - v00) * (1 - sx) + (v11 - v10) * sx) / (y[j + 1] - y[j])
    return gx, gy
