from functools import cached_property

from numpy import asarray, linspace, sign, sqrt

from .._util import check_positive, format_object
from ..field import gradient
from ._contour import fiber_index, fiber_points


def c3_constant(well):
    """
    c₃ = ½√(min_{|t|≤3/4} W(t)).

    Example
    -------

    .. doctest::

        >>> from phasefield_core.potential import QuarticWell
        >>> from phasefield_core.slicing import c3_constant
        >>>
        >>> print(f"{c3_constant(QuarticWell()):.6f}")
        0.109375
    """
    s = linspace(-0.75, 0.75, 1501)
    return float(sqrt(max(float(well.value(s).min()), 0.0)) / 2)


class FiberParams:
    """
    Reference data for classifying fibers.

    Parameters
    ----------
    directions : array_like
        Reference points p₁..p_N in the fiber plane with |pⱼ| = ½.
    well : DoubleWell
        Potential; sets c₃.
    delta : float, optional
        Disk radius δ. Defaults to a fifth of the smallest distance between
        reference points (⅛ for a single point). The disks B_{2δ}(pⱼ) must be
        disjoint.
    center : array_like
        Centre of the unit disk in the fiber plane.
    radius : float
        Length unit: the fiber disk is B_radius(center) and the reference points
        sit at center + radius·pⱼ.
    """

    def __init__(self, directions, well, delta=None, center=(0.0, 0.0), radius=1.0):
        p = asarray(directions, float).reshape(-1, 2)
        if p.shape[0] == 0:
            raise ValueError("At least one reference direction is needed.")
        if (abs(sqrt((p**2).sum(1)) - 0.5) > 1e-12).any():
            raise ValueError("Reference directions must have length 1/2.")
        dmin = _min_distance(p)
        if delta is None:
            delta = dmin / 5 if p.shape[0] > 1 else 0.125
        delta = check_positive(delta, "delta")
        if p.shape[0] > 1 and not 4 * delta < dmin:
            raise ValueError("The disks of radius 2δ around the references must be disjoint.")

        self._p = p
        self._well = well
        self._delta = delta
        self._center = asarray(center, float).ravel()
        self._radius = check_positive(radius, "radius")

    @classmethod
    def equiangular(cls, count, well, angle=0.0, **kwargs):
        """
        ``count`` reference points evenly spread on the circle of radius ½.
        """
        from numpy import cos, pi, sin

        a = angle + 2 * pi * linspace(0, 1, count, endpoint=False)
        return cls(0.5 * asarray([cos(a), sin(a)]).T, well, **kwargs)

    @property
    def directions(self):
        return self._p

    @property
    def delta(self):
        return self._delta

    @property
    def center(self):
        return self._center

    @property
    def radius(self):
        return self._radius

    @property
    def well(self):
        return self._well

    @cached_property
    def c3(self):
        return c3_constant(self._well)

    def __str__(self):
        params = {"N": self._p.shape[0], "delta": self._delta, "radius": self._radius}
        return format_object(self, params, [("c3", f"{self.c3:.6g}")])


def _min_distance(p):
    if p.shape[0] < 2:
        return float("inf")
    d = sqrt(((p[:, None, :] - p[None, :, :]) ** 2).sum(2))
    return float(d[d > 0].min()) if (d > 0).any() else 0.0


class FiberClassification:
    """
    Membership of one fiber in the sets D_ε and Q_ε.

    Attributes
    ----------
    z : tuple
        Fiber point.
    in_D : bool
        |∇u| ≥ c₃/ε at every fiber node of the unit disk with |u| ≤ ½.
    in_Q : bool
        Around every reference point, the sampled values cover [−½, ½].
    in_D_prime : bool
        |u| > ½ at every fiber node of the unit disk.
    crossings : tuple of int
        Level-0 crossings along the transversal segment through each disk.
    c3 : float
    delta : float
    directions : ndarray
    """

    def __init__(self, z, in_D, in_Q, in_D_prime, crossings, c3, delta, directions):
        self.z = tuple(z)
        self.in_D = bool(in_D)
        self.in_Q = bool(in_Q)
        self.in_D_prime = bool(in_D_prime)
        self.crossings = tuple(int(c) for c in crossings)
        self.c3 = float(c3)
        self.delta = float(delta)
        self.directions = directions

    @property
    def good(self):
        """
        Whether the fiber lies in D_ε ∩ Q_ε.
        """
        return self.in_D and self.in_Q

    def to_row(self):
        return list(self.z) + [int(self.in_D), int(self.in_Q), int(self.in_D_prime)]

    def __str__(self):
        params = {"z": self.z, "in_D": self.in_D, "in_Q": self.in_Q}
        return format_object(self, params, [("crossings", list(self.crossings))])


def _transversal_crossings(plane, axes, point, direction, half, nsamples=65):
    from scipy.ndimage import map_coordinates

    normal = asarray([-direction[1], direction[0]])
    normal = normal / sqrt((normal**2).sum())
    s = linspace(-half, half, nsamples)
    xs = point[0] + s * normal[0]
    ys = point[1] + s * normal[1]
    fx = (xs - axes[0][0]) / (axes[0][1] - axes[0][0])
    fy = (ys - axes[1][0]) / (axes[1][1] - axes[1][0])
    v = map_coordinates(plane, [fx, fy], order=1, mode="nearest")
    sg = sign(v)
    sg = sg[sg != 0]
    return int((sg[1:] != sg[:-1]).sum())


def classify_fiber(u, eps, z, params, grad=None):
    """
    Classify one fiber of a phase field.

    Parameters
    ----------
    u : ScalarField
        Field on a grid of dimension at least two.
    eps : float
        Interface width ε.
    z : array_like
        Fiber point; ``None`` or empty in two dimensions.
    params : FiberParams
        Reference points, δ and c₃.
    grad : VectorField, optional
        Precomputed ∇u.

    Returns
    -------
    FiberClassification
    """
    eps = check_positive(eps, "eps")
    grid = u.grid
    index = fiber_index(grid, z)
    zt = tuple(float(grid.axes[a][k]) for a, k in zip(range(2, grid.n), index))
    sl = (slice(None), slice(None)) + index
    plane = u.values[sl]
    if grad is None:
        grad = gradient(u)
    gnorm = sqrt((grad.values**2).sum(0))[sl]

    x, y = grid.mesh[0][sl], grid.mesh[1][sl]
    c = params.center
    R = params.radius
    disk = (x - c[0]) ** 2 + (y - c[1]) ** 2 <= R**2

    interface = disk & (abs(plane) <= 0.5)
    in_D = bool((gnorm[interface] >= params.c3 / eps).all())
    in_D_prime = not interface.any()

    axes = (grid.axes[0], grid.axes[1])
    in_Q = True
    crossings = []
    for p in params.directions:
        q = c + R * p
        near = (x - q[0]) ** 2 + (y - q[1]) ** 2 <= (params.delta * R) ** 2
        vals = plane[near]
        if vals.size == 0 or vals.min() > -0.5 or vals.max() < 0.5:
            in_Q = False
        crossings.append(_transversal_crossings(plane, axes, q, p, params.delta * R))

    return FiberClassification(
        zt, in_D, in_Q, in_D_prime, crossings, params.c3, params.delta, params.directions
    )


def classify_fibers(u, eps, params, zs=None, verbose=False):
    """
    Classify every fiber of the unit ball B₁^{n−2}.

    Parameters
    ----------
    zs : list of tuple, optional
        Fiber points. Defaults to the fiber nodes with |z| ≤ 1; the single fiber
        in two dimensions.
    """
    from tqdm import tqdm

    grid = u.grid
    if zs is None:
        zs = [z for z in fiber_points(grid) if sum(v**2 for v in z) <= 1 + 1e-12]
    grad = gradient(u)
    return [
        classify_fiber(u, eps, z, params, grad=grad)
        for z in tqdm(zs, desc="Fibers", disable=not verbose)
    ]


def exceptional_fraction(classes, grid=None):
    """
    Fraction of fibers outside D_ε ∩ Q_ε.

    With ``grid`` the fibers are weighted by the trapezoidal weights of the
    axes beyond the second; otherwise every fiber counts once.
    """
    if len(classes) == 0:
        raise ValueError("No fibers were classified.")
    weights = []
    for c in classes:
        w = 1.0
        if grid is not None:
            for axis, value in enumerate(c.z, start=2):
                k = int(abs(grid.axes[axis] - value).argmin())
                w *= float(grid.axis_weights(axis).ravel()[k])
        weights.append(w)
    total = sum(weights)
    bad = sum(w for w, c in zip(weights, classes) if not c.good)
    return bad / total
