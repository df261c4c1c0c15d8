import warnings

from numpy import (
    arctan2,
    asarray,
    ceil,
    concatenate,
    cumsum,
    diff,
    interp,
    linspace,
    pi,
    sqrt,
    unwrap,
)

from .._util import format_object


class SliceCurve:
    """
    Oriented polyline of a level set inside one fiber plane.

    Vertices are ordered so that ∇u points to the left of the tangent. A closed
    curve does not repeat its first vertex.

    Parameters
    ----------
    vertices : array_like
        (m, 2) array of in-plane coordinates (y₁, y₂).
    level : float
        Level t of the curve.
    z : tuple
        Fiber coordinates; empty in two dimensions.
    closed : bool
        Whether the last vertex connects back to the first.
    spacing : float
        Grid spacing the curve was extracted at.
    """

    def __init__(self, vertices, level, z=(), closed=False, spacing=None):
        vertices = asarray(vertices, float).reshape(-1, 2)
        if vertices.shape[0] > 1:
            steps = sqrt((diff(vertices, axis=0) ** 2).sum(1))
            if (steps == 0).any():
                raise ValueError("Consecutive vertices must be distinct.")
        self._vertices = vertices
        self._level = float(level)
        self._z = tuple(float(v) for v in z)
        self._closed = bool(closed)
        self._spacing = None if spacing is None else float(spacing)

    @property
    def vertices(self):
        return self._vertices

    @property
    def level(self):
        return self._level

    @property
    def z(self):
        return self._z

    @property
    def closed(self):
        return self._closed

    @property
    def spacing(self):
        return self._spacing

    def __len__(self):
        return self._vertices.shape[0]

    def _path(self):
        v = self._vertices
        if self._closed:
            return concatenate([v, v[:1]])
        return v

    @property
    def arclengths(self):
        """
        Cumulative arclength at every vertex of the path, starting at 0.

        For closed curves the path ends with the first vertex again.
        """
        steps = sqrt((diff(self._path(), axis=0) ** 2).sum(1))
        return concatenate([[0.0], cumsum(steps)])

    @property
    def length(self):
        return float(self.arclengths[-1])

    @property
    def tangent_angles(self):
        """
        Continuously unwrapped angles of the path segments.
        """
        d = diff(self._path(), axis=0)
        return unwrap(arctan2(d[:, 1], d[:, 0]))

    def resample(self, step):
        """
        Curve with vertices equally spaced in arclength, at most ``step`` apart.
        """
        s = self.arclengths
        L = s[-1]
        nseg = max(int(ceil(L / step - 1e-9)), 3)
        t = linspace(0.0, L, nseg + 1)
        path = self._path()
        v = asarray([interp(t, s, path[:, 0]), interp(t, s, path[:, 1])]).T
        if self._closed:
            v = v[:-1]
        return SliceCurve(v, self._level, self._z, self._closed, self._spacing)

    def smooth(self):
        """
        One pass of 3-point smoothing (¼, ½, ¼); open curves keep their endpoints.
        """
        v = self._vertices
        if len(v) < 3:
            return self
        out = v.copy()
        if self._closed:
            prev = concatenate([v[-1:], v[:-1]])
            nxt = concatenate([v[1:], v[:1]])
            out = (prev + 2 * v + nxt) / 4
        else:
            out[1:-1] = (v[:-2] + 2 * v[1:-1] + v[2:]) / 4
        return SliceCurve(out, self._level, self._z, self._closed, self._spacing)

    def to_rows(self):
        """
        CSV rows (z..., t, vertex_index, y1, y2).
        """
        return [
            list(self._z) + [self._level, i, float(y1), float(y2)]
            for i, (y1, y2) in enumerate(self._vertices)
        ]

    def __str__(self):
        params = {"level": self._level, "closed": self._closed}
        if self._z:
            params["z"] = self._z
        attrs = [("vertices", len(self)), ("length", f"{self.length:.6g}")]
        return format_object(self, params, attrs)


def _prepared(c, eps):
    step = c.spacing if c.spacing is not None else c.length / max(len(c), 3)
    if eps is not None:
        step = min(step, eps / 4)
    return c.resample(step).smooth()


def _exterior_angles(c):
    d = diff(c._path(), axis=0)
    theta = arctan2(d[:, 1], d[:, 0])
    if c.closed:
        theta = concatenate([theta, theta[:1]])
    turn = diff(theta)
    return (turn + pi) % (2 * pi) - pi


def curvature_integral(c, eps=None):
    """
    Total absolute curvature ∫|κ| ds of a slice curve.

    The curve is resampled uniformly in arclength with step min(h, ε/4), smoothed
    once with the 3-point filter, and ∫|κ| ds is the sum of the absolute exterior
    angles |Δθ| between consecutive segments.

    Parameters
    ----------
    c : SliceCurve
        Curve with at least three vertices.
    eps : float, optional
        Interface width ε bounding the resampling step.

    Returns
    -------
    float
        Σ|Δθ|; ``0`` with a warning for degenerate curves.
    """
    if len(c) < 3:
        warnings.warn("Degenerate curve with fewer than three vertices.", RuntimeWarning)
        return 0.0
    return float(abs(_exterior_angles(_prepared(c, eps))).sum())


def turning_angle(c, eps=None):
    """
    Signed net change of the tangent angle along a slice curve.

    Open curves give the difference between the last and first tangent angles;
    closed curves give the total signed turning, a multiple of 2π. The curve is
    prepared as in :func:`curvature_integral`.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.slicing import SliceCurve, turning_angle
        >>>
        >>> c = SliceCurve([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], 0.0, closed=True)
        >>> print(f"{turning_angle(c):.6f}")
        6.283185
    """
    if len(c) < 3:
        warnings.warn("Degenerate curve with fewer than three vertices.", RuntimeWarning)
        return 0.0
    return float(_exterior_angles(_prepared(c, eps)).sum())
