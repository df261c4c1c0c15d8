import warnings

from numpy import asarray, concatenate, empty, gradient as npgradient, zeros

from ._field import ScalarField, TensorField, VectorField
from ._region import region_mask

_CLOSURES = (None, "neumann", "periodic", "dirichlet")


def _values(f):
    if isinstance(f, ScalarField):
        return f.values
    return asarray(f, float)


def _axis_gradient(v, h, axis):
    return npgradient(v, h, axis=axis, edge_order=2)


def gradient(f):
    """
    Gradient by second-order central differences.

    Interior nodes use (f₊ − f₋)/2h; face nodes use the second-order one-sided
    stencil (−3f₀ + 4f₁ − f₂)/2h.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid, ScalarField, gradient
        >>>
        >>> grid = Grid([(0.0, 1.0), (0.0, 1.0)], (9, 9))
        >>> f = ScalarField.from_function(grid, lambda x, y: 3 * x)
        >>> g = gradient(f)
        >>> print(g.values[0].min(), g.values[0].max(), abs(g.values[1]).max())
        3.0 3.0 0.0
    """
    grid = f.grid
    if min(grid.shape) < 3:
        raise ValueError("Gradients need at least three nodes per axis.")
    v = f.values
    comps = [_axis_gradient(v, h, a) for a, h in enumerate(grid.h)]
    return VectorField(grid, asarray(comps))


def second_difference(v, h, axis, closure=None):
    """
    ∂²/∂xₐ² of the array ``v`` along ``axis`` with a boundary closure.

    Closures:

    - ``None``: one-sided second-order stencil (2f₀ − 5f₁ + 4f₂ − f₃)/h² on faces.
    - ``"neumann"``: mirror ghost node f₋₁ = f₁.
    - ``"periodic"``: first and last nodes identified.
    - ``"dirichlet"``: zero ghost nodes outside ``v``.
    """
    if closure not in _CLOSURES:
        raise ValueError(f"Unknown boundary closure `{closure}`.")
    v = asarray(v, float)
    v = v.swapaxes(0, axis)
    out = empty(v.shape)

    if closure == "periodic":
        r = v[:-1]
        d = concatenate([r[-1:], r[:-1]]) + concatenate([r[1:], r[:1]]) - 2 * r
        out[:-1] = d
        out[-1] = d[0]
    else:
        out[1:-1] = (v[:-2] + v[2:]) - 2 * v[1:-1]
        if closure is None:
            out[0] = 2 * v[0] - 5 * v[1] + 4 * v[2] - v[3]
            out[-1] = 2 * v[-1] - 5 * v[-2] + 4 * v[-3] - v[-4]
        else:
            ghost = 1.0 if closure == "neumann" else 0.0
            out[0] = ghost * v[1] - 2 * v[0] + v[1]
            out[-1] = v[-2] - 2 * v[-1] + ghost * v[-2]

    return (out / h**2).swapaxes(0, axis)


def laplacian(f, boundary=None):
    """
    Five-point (seven-point in 3D) Laplacian.

    Parameters
    ----------
    f : ScalarField
        Input field.
    boundary : str, optional
        Closure at the box faces: ``None`` (one-sided stencils), ``"neumann"``,
        ``"periodic"`` or ``"dirichlet"``.

    Returns
    -------
    ScalarField
        Δₕf.
    """
    grid = f.grid
    v = f.values
    out = zeros(grid.shape)
    for a, h in enumerate(grid.h):
        out += second_difference(v, h, a, boundary)
    return ScalarField(grid, out)


def hessian(f):
    """
    Hessian bundle ∇²f.

    Diagonal entries are second differences. Off-diagonal entries use the
    four-corner stencil ((f₊₊ + f₋₋) − (f₊₋ + f₋₊))/4hᵢhⱼ at nodes interior to both
    axes and central differences applied twice on the faces. The bundle is
    symmetric, and 90° rotations of a field on a square grid rotate the interior
    bundle without rounding differences.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid, ScalarField, hessian
        >>>
        >>> grid = Grid([(-1.0, 1.0), (-1.0, 1.0)], (9, 9))
        >>> f = ScalarField.from_function(grid, lambda x, y: x * y)
        >>> H = hessian(f)
        >>> print(f"{H.values[0, 1].min():.12f} {H.values[0, 1].max():.12f}")
        1.000000000000 1.000000000000
    """
    grid = f.grid
    n = grid.n
    v = f.values
    H = empty((n, n) + grid.shape)
    first = [_axis_gradient(v, h, a) for a, h in enumerate(grid.h)]
    for i in range(n):
        H[i, i] = second_difference(v, grid.h[i], i)
        for j in range(i + 1, n):
            H[i, j] = _axis_gradient(first[i], grid.h[j], j)
            H[i, j][_inner(n, i, j)] = _mixed_difference(v, grid.h[i], grid.h[j], i, j)
            H[j, i] = H[i, j]
    return TensorField(grid, H)


def _inner(n, i, j):
    sl = [slice(None)] * n
    sl[i] = sl[j] = slice(1, -1)
    return tuple(sl)


def _mixed_difference(v, hi, hj, i, j):
    def corner(si, sj):
        sl = [slice(1, -1)] * v.ndim
        for a in range(v.ndim):
            if a not in (i, j):
                sl[a] = slice(None)
        sl[i] = slice(2, None) if si > 0 else slice(None, -2)
        sl[j] = slice(2, None) if sj > 0 else slice(None, -2)
        return v[tuple(sl)]

    same = corner(1, 1) + corner(-1, -1)
    cross = corner(1, -1) + corner(-1, 1)
    return (same - cross) / (4 * hi * hj)


def integrate(f, region=None):
    """
    Trapezoidal integral of ``f`` over the nodes selected by ``region``.

    Masked nodes keep their full trapezoidal weight; there is no partial-cell
    correction. An empty mask gives ``0.0`` and a :class:`RuntimeWarning`.

    Parameters
    ----------
    f : ScalarField
        Integrand.
    region : Ball, Box or boolean array, optional
        Integration region. Defaults to the whole box.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid, ScalarField, integrate
        >>>
        >>> grid = Grid([(0.0, 1.0), (0.0, 1.0)], (11, 11))
        >>> print(f"{integrate(ScalarField.constant(grid, 1.0)):.12f}")
        1.000000000000
    """
    grid = f.grid
    mask = region_mask(grid, region)
    if not mask.any():
        warnings.warn("The integration region contains no grid node.", RuntimeWarning)
        return 0.0
    w = grid.weights
    return float((w[mask] * f.values[mask]).sum())


def staggered_gradient_energy(f, region=None):
    """
    Edge-based Dirichlet energy ½∫|∇f|².

    Each edge between neighbouring nodes along axis a contributes
    ½·hₐ·w⊥·((fᵢ₊₁ − fᵢ)/hₐ)², where w⊥ is the product of the transverse
    trapezoidal weights. With a region mask m the edge weight is scaled by
    (mᵢ + mᵢ₊₁)/2, which keeps the energy additive over disjoint regions.
    Its gradient with respect to the node values is −w·Δₕf with the Neumann
    closure.
    """
    grid = f.grid
    m = region_mask(grid, region).astype(float)
    v = f.values
    total = 0.0
    for a, h in enumerate(grid.h):
        n = v.shape[a]
        lo = range(n - 1)
        hi = range(1, n)
        d = (v.take(hi, axis=a) - v.take(lo, axis=a)) / h
        me = (m.take(hi, axis=a) + m.take(lo, axis=a)) / 2
        w = _transverse_weights(grid, a) * h
        total += 0.5 * float((w * me * d**2).sum())
    return total


def _transverse_weights(grid, axis):
    from numpy import ones

    w = ones([1] * grid.n)
    for b in range(grid.n):
        if b != axis:
            w = w * grid.axis_weights(b)
    return w
