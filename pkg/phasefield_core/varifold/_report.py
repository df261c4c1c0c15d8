import json

from numpy import asarray, geomspace, isfinite, sqrt
from numpy.random import RandomState

from .._util import format_object
from ..field import gradient, random_vector_fields
from ._monotonicity import MonotonicityTable
from ._varifold import DiffuseVarifold


class DiagnosticsReport:
    """
    Scalar diagnostics of one phase state.

    Attributes
    ----------
    energy : float
        E_ε(u).
    mass : float
        ‖V_ε‖(Ω).
    discrepancy_L1 : float
        ∫_U |ξ| over the interior box.
    first_variation_sup : float
        max |δV_ε(g)|/‖∇g‖∞ over a battery of random test fields.
    B_density_integral : float
        ∫_U εB²|∇u|² over the interior box.
    monotonicity : MonotonicityTable
        Scaled energies and fitted constants.
    gradient_bound_violation : float
        Largest violation of the discrepancy gradient bound.
    c1 : float or None
        Energy bound being checked, if any.
    """

    _scalars = (
        "energy",
        "mass",
        "discrepancy_L1",
        "first_variation_sup",
        "B_density_integral",
        "gradient_bound_violation",
    )

    def __init__(
        self,
        energy,
        mass,
        discrepancy_L1,
        first_variation_sup,
        B_density_integral,
        monotonicity,
        gradient_bound_violation,
        c1=None,
    ):
        self.energy = float(energy)
        self.mass = float(mass)
        self.discrepancy_L1 = float(discrepancy_L1)
        self.first_variation_sup = float(first_variation_sup)
        self.B_density_integral = float(B_density_integral)
        self.monotonicity = monotonicity
        self.gradient_bound_violation = float(gradient_bound_violation)
        self.c1 = None if c1 is None else float(c1)
        if not all(isfinite(getattr(self, k)) for k in self._scalars):
            raise ValueError("Diagnostics must be finite.")
        if self.discrepancy_L1 < 0:
            raise ValueError("The discrepancy integral must be nonnegative.")

    @property
    def energy_bounded(self):
        """
        Whether E_ε(u) ≤ c₁; ``None`` without a bound.
        """
        if self.c1 is None:
            return None
        return self.energy <= self.c1

    def to_dict(self):
        d = {k: getattr(self, k) for k in self._scalars}
        d["c1"] = self.c1
        d["energy_bounded"] = self.energy_bounded
        d["monotonicity"] = self.monotonicity.to_dict()
        return d

    @classmethod
    def from_dict(cls, d):
        m = d["monotonicity"]
        rows = [(tuple(r["x0"]), r["r"], r["ratio"]) for r in m["rows"]]
        table = MonotonicityTable(rows, m["c"], m["c_full"])
        scalars = {k: d[k] for k in cls._scalars}
        return cls(monotonicity=table, c1=d.get("c1"), **scalars)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __str__(self):
        attrs = [(k, f"{getattr(self, k):.6g}") for k in self._scalars]
        attrs.append(("monotonicity c", f"{self.monotonicity.c:.6g}"))
        return format_object(self, {"c1": self.c1}, attrs)


def default_radii(grid, x0, eps, count=5):
    """
    Radii from 4ε up to 90% of the distance from x₀ to the boundary.
    """
    x0 = asarray(x0, float)
    rmax = 0.9 * float(min((x0 - grid.low).min(), (grid.high - x0).min()))
    if rmax <= 0:
        raise ValueError("The monotonicity center must lie inside the box.")
    rmin = min(4 * eps, rmax)
    if rmin == rmax:
        return [rmax]
    radii = [float(r) for r in geomspace(rmin, rmax, count)]
    radii[0], radii[-1] = rmin, rmax
    return radii


def _gradient_sup(g):
    """
    ‖∇g‖∞, the largest Frobenius norm of the Jacobian over the nodes.
    """
    n = g.grid.n
    total = sum((gradient(g.component(i)).values ** 2).sum(0) for i in range(n))
    return float(sqrt(total).max())


def diagnose(state, points=None, radii=None, seed=0, battery=10, c1=None):
    """
    Evaluate every varifold diagnostic of a state.

    Parameters
    ----------
    state : PhaseState
        State u.
    points : array_like, optional
        Monotonicity centres, one per row. Defaults to the centre of the box.
    radii : sequence of float, optional
        Monotonicity radii. Defaults to five radii from 4ε to 90% of the distance
        to the boundary.
    seed : int
        Seed of the random test battery.
    battery : int
        Number of random test vector fields.
    c1 : float, optional
        Energy bound to check.

    Returns
    -------
    DiagnosticsReport
    """
    grid = state.grid
    v = DiffuseVarifold(state)

    random = RandomState(seed)
    fv = 0.0
    for g in random_vector_fields(grid, battery, random):
        scale = _gradient_sup(g)
        if scale > 0:
            fv = max(fv, abs(v.first_variation(g)) / scale)

    if points is None:
        points = [(grid.low + grid.high) / 2]
    points = asarray(points, float).reshape(-1, grid.n)
    table = None
    for x0 in points:
        rs = default_radii(grid, x0, state.eps) if radii is None else radii
        t = v.monotonicity_check(x0, rs)
        table = t if table is None else table.extend(t)

    return DiagnosticsReport(
        energy=state.energy(),
        mass=v.mass(),
        discrepancy_L1=v.discrepancy()[1],
        first_variation_sup=fv,
        B_density_integral=v.nu_mass(),
        monotonicity=table,
        gradient_bound_violation=v.gradient_bound_check(),
        c1=c1,
    )
