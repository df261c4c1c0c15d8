from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from numpy import asarray, clip, cos, exp, log, minimum, ones, pi, sin, sqrt, stack, where, zeros

from .._util import check_positive
from ..field import ScalarField

KINDS = (
    "flat_interface",
    "sphere_shell",
    "double_layer",
    "triple_junction",
    "constant",
    "ramp",
    "cylinder",
)


@dataclass(frozen=True)
class AnsatzSpec:
    """
    Initial phase field built from the standing wave q₀.

    Attributes
    ----------
    kind : str
        One of ``flat_interface``, ``sphere_shell``, ``double_layer``,
        ``triple_junction``, ``constant``, ``ramp`` and ``cylinder``.
    normal : tuple, optional
        Plane normal for ``flat_interface``, ``double_layer`` and ``ramp``.
        Defaults to the second axis (the first in one dimension).
    offset : float
        Plane offset along the normal.
    center : tuple, optional
        Centre of spheres, cylinders and junctions. Defaults to the origin.
    radius : float
        Sphere or cylinder radius R.
    separation : float, optional
        Distance d between the two sheets of a double layer. Defaults to 20ε.
    angle : float
        Rotation of the first junction leg from the first axis.
    strip : float, optional
        Half-width w of the negative strip around each junction leg.
        Defaults to 2ε.
    value : float
        Value of the ``constant`` field.
    modulation : float
        Relative radius modulation m of the cylinder, R(z) = R(1 + m sin(2πz/λ)).
    wavelength : float
        Modulation wavelength λ.
    """

    kind: str = "flat_interface"
    normal: Optional[Tuple[float, ...]] = None
    offset: float = 0.0
    center: Optional[Tuple[float, ...]] = None
    radius: float = 0.25
    separation: Optional[float] = None
    angle: float = 0.0
    strip: Optional[float] = None
    value: float = 1.0
    modulation: float = 0.0
    wavelength: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown ansatz kind '{self.kind}'.")
        check_positive(self.radius, "radius")
        check_positive(self.wavelength, "wavelength")
        if self.separation is not None:
            check_positive(self.separation, "separation")
        if self.strip is not None:
            check_positive(self.strip, "strip")
        if not abs(self.value) <= 1:
            raise ValueError("Constant fields must take a value in [-1, 1].")
        if not 0 <= self.modulation < 1:
            raise ValueError("`modulation` must lie in [0, 1).")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        for key in ["normal", "center"]:
            if d.get(key) is not None:
                d[key] = tuple(float(v) for v in d[key])
        return cls(**d)

    def _normal(self, n):
        if self.normal is None:
            nu = zeros(n)
            nu[1 if n > 1 else 0] = 1.0
            return nu
        nu = asarray(self.normal, float)
        if nu.shape != (n,):
            raise ValueError(f"`normal` must have {n} components.")
        return nu / sqrt((nu**2).sum())

    def _center(self, n):
        if self.center is None:
            return zeros(n)
        c = asarray(self.center, float)
        if c.shape != (n,):
            raise ValueError(f"`center` must have {n} components.")
        return c

    def _legs(self):
        a = self.angle + 2 * pi * asarray([0, 1, 2]) / 3
        return stack([cos(a), sin(a)], axis=1)


def _check_resolution(grid, eps):
    if grid.hmax > eps / 8 * (1 + 1e-9):
        raise ValueError("The grid must resolve ε with spacing at most ε/8.")


def _leg_distance(px, py, e):
    s = px * e[0] + py * e[1]
    perp = sqrt((px - s * e[0]) ** 2 + (py - s * e[1]) ** 2)
    return where(s < 0, sqrt(px**2 + py**2), perp)


def generate(spec, grid, eps, well=None):
    """
    Sample an ansatz on a grid.

    Every kind composes the standing wave with a distance: ``flat_interface``
    gives q₀((x·ν − offset)/ε), ``sphere_shell`` q₀((|x − c| − R)/ε),
    ``double_layer`` q₀((|x·ν − offset| − d/2)/ε) and ``cylinder``
    q₀((ρ − R(z))/ε) with ρ the distance to the axis through c along the last
    coordinate. The ``triple_junction`` is q₀((D − w)/ε) with D the softmin at
    scale ε of the distances to three half-lines at 120° in the plane of the
    first two axes, so each leg is a double layer of half-width w. ``ramp`` is
    the clamped ramp clip((x·ν − offset)/ε, −1, 1).

    Parameters
    ----------
    spec : AnsatzSpec
        Ansatz.
    grid : Grid
        Grid with spacing at most ε/8.
    eps : float
        Interface width ε.
    well : DoubleWell, optional
        Potential. Defaults to the quartic well.

    Returns
    -------
    ScalarField
        Values in [−1, 1].

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid
        >>> from phasefield_core.harness import AnsatzSpec, generate
        >>>
        >>> grid = Grid([(-1.0, 1.0), (-1.0, 1.0)], (401, 401))
        >>> u = generate(AnsatzSpec("sphere_shell", radius=0.5), grid, 0.04)
        >>> print(f"{u.values[200, 200]:.6f}")
        -1.000000
    """
    from ..potential import QuarticWell

    eps = check_positive(eps, "eps")
    _check_resolution(grid, eps)
    if well is None:
        well = QuarticWell()
    q = well.profile
    n = grid.n
    x = grid.mesh
    kind = spec.kind

    if kind == "constant":
        return ScalarField.constant(grid, spec.value)

    if kind in ("flat_interface", "double_layer", "ramp"):
        nu = spec._normal(n)
        d = sum(xi * v for xi, v in zip(x, nu)) - spec.offset
        if kind == "ramp":
            return ScalarField(grid, clip(d / eps, -1, 1))
        if kind == "double_layer":
            sep = 20 * eps if spec.separation is None else spec.separation
            d = abs(d) - sep / 2
        return ScalarField(grid, q(d / eps))

    c = spec._center(n)
    if kind == "sphere_shell":
        r = sqrt(sum((xi - ci) ** 2 for xi, ci in zip(x, c)))
        return ScalarField(grid, q((r - spec.radius) / eps))

    if n < 2:
        raise ValueError(f"The {kind} ansatz needs at least two dimensions.")

    if kind == "cylinder":
        rho = sqrt((x[0] - c[0]) ** 2 + (x[1] - c[1]) ** 2)
        R = spec.radius
        if n > 2:
            R = R * (1 + spec.modulation * sin(2 * pi * (x[-1] - c[-1]) / spec.wavelength))
        return ScalarField(grid, q((rho - R) / eps))

    w = 2 * eps if spec.strip is None else spec.strip
    px, py = x[0] - c[0], x[1] - c[1]
    dist = [_leg_distance(px, py, e) for e in spec._legs()]
    dmin = minimum(minimum(dist[0], dist[1]), dist[2])
    D = dmin - eps * log(sum(exp(-(d - dmin) / eps) for d in dist))
    return ScalarField(grid, q((D - w) / eps))


def skeleton(spec, grid, eps, region=None):
    """
    Samples of the reference surface of an ansatz inside ``region``.

    The reference surface is the sharp-interface limit: the plane, sphere or
    cylinder itself, both sheets of a double layer, or the three junction legs.
    Samples are the projections of the grid nodes in ``region`` (default: the
    interior box) that land inside it. Constant fields have none.

    Returns
    -------
    ndarray
        (m, n) array of points.
    """
    from ..field import region_mask

    if region is None:
        region = grid.interior()
    n = grid.n
    pts = grid.points[region_mask(grid, region).ravel()]
    kind = spec.kind
    if kind == "constant" or pts.shape[0] == 0:
        return zeros((0, n))

    if kind in ("flat_interface", "ramp", "double_layer"):
        nu = spec._normal(n)
        d = pts @ nu - spec.offset
        if kind == "double_layer":
            sep = 20 * eps if spec.separation is None else spec.separation
            out = [pts - (d - s)[:, None] * nu for s in (sep / 2, -sep / 2)]
            proj = asarray(out).reshape(-1, n)
        else:
            proj = pts - d[:, None] * nu
    elif kind == "sphere_shell":
        c = spec._center(n)
        v = pts - c
        r = sqrt((v**2).sum(1))
        keep = r > 0
        proj = c + spec.radius * v[keep] / r[keep, None]
    elif kind == "cylinder":
        c = spec._center(n)
        v = pts.copy()
        v[:, :2] -= c[:2]
        rho = sqrt((v[:, :2] ** 2).sum(1))
        keep = rho > 0
        R = spec.radius
        if n > 2:
            R = R * (1 + spec.modulation * sin(2 * pi * (pts[:, -1] - c[-1]) / spec.wavelength))
            R = R[keep]
        proj = pts[keep].copy()
        proj[:, :2] = c[:2] + (R / rho[keep])[:, None] * v[keep, :2]
    else:
        c = spec._center(n)
        out = []
        for e in spec._legs():
            s = ((pts[:, 0] - c[0]) * e[0] + (pts[:, 1] - c[1]) * e[1]).clip(min=0)
            p = pts.copy()
            p[:, 0] = c[0] + s * e[0]
            p[:, 1] = c[1] + s * e[1]
            out.append(p)
        proj = asarray(out).reshape(-1, n)

    inside = _inside(grid, region, proj)
    return proj[inside]


def _inside(grid, region, pts):
    if region is None:
        return ones(pts.shape[0], bool)
    if hasattr(region, "low"):
        tol = 1e-12 * (grid.high - grid.low)
        return ((pts >= region.low - tol) & (pts <= region.high + tol)).all(1)
    return ((pts - region.center) ** 2).sum(1) <= region.radius**2
