import warnings
from functools import cached_property

from numpy import argsort, asarray, cumsum, linspace, pi, searchsorted, sqrt, where

from .._util import check_boundary_zero, check_point, check_positive, format_object
from ..field import Ball, ScalarField, VectorField, gradient, integrate
from ._monotonicity import MonotonicityTable
from ._second import second_fundamental_density


def unit_ball_volume(k):
    """
    Volume ωₖ of the unit ball in ℝᵏ.
    """
    from scipy.special import gamma

    return float(pi ** (k / 2) / gamma(k / 2 + 1))


class DiffuseVarifold:
    """
    Diffuse varifold of a phase state.

    For a test function φ(x, S) on positions and (n−1)-planes,

        V_ε(φ) = (1/σ) ∫_{|∇u|>0} φ(x, I − n⊗n) (ε/2)|∇u|² dx,   n = ∇u/|∇u|,

    so the weight measure ‖V_ε‖ has density (ε/2σ)|∇u|². Nodes with
    |∇u| ≤ θ·max|∇u| are treated as {∇u = 0}.

    Parameters
    ----------
    state : PhaseState
        Phase state u.
    threshold : float
        Relative gradient threshold θ. Defaults to ``1e-12``.
    """

    def __init__(self, state, threshold=1e-12):
        self._state = state
        self._threshold = check_positive(threshold, "threshold")

    @property
    def state(self):
        return self._state

    @property
    def grid(self):
        return self._state.grid

    @property
    def eps(self):
        return self._state.eps

    @property
    def sigma(self):
        return self._state.well.sigma

    @cached_property
    def grad(self):
        """
        ∇u by central differences.
        """
        return gradient(self._state.u)

    @cached_property
    def _grad2(self):
        return (self.grad.values**2).sum(0)

    @property
    def theta(self):
        """
        Absolute gradient threshold θ·max|∇u|.
        """
        return self._threshold * float(sqrt(self._grad2.max()))

    @cached_property
    def support(self):
        """
        Nodes where |∇u| > θ.
        """
        return sqrt(self._grad2) > self.theta

    @cached_property
    def normal(self):
        """
        Unit normal ∇u/|∇u| on the support, zero elsewhere.
        """
        g = self.grad.values
        norm = where(self.support, sqrt(self._grad2), 1.0)
        return VectorField(self.grid, where(self.support, g / norm, 0.0))

    def weight_density(self):
        """
        Density (ε/2σ)|∇u|² of the weight measure.
        """
        return ScalarField(self.grid, self.eps / (2 * self.sigma) * self._grad2)

    def energy_density(self):
        """
        Energy density ε|∇u|²/2 + W(u)/ε.
        """
        u = self._state.u.values
        eps = self.eps
        return ScalarField(self.grid, eps * self._grad2 / 2 + self._state.well.value(u) / eps)

    def mass(self, region=None):
        """
        ‖V_ε‖(region), by default over the whole box.
        """
        return integrate(self.weight_density(), region)

    def first_variation(self, g):
        """
        First variation δV_ε(g) = (1/σ)∫ tr(∇g·(I − n⊗n)) (ε/2)|∇u|² dx.

        Parameters
        ----------
        g : VectorField
            Test vector field vanishing on the outermost ring of nodes.

        Returns
        -------
        float
            δV_ε(g).
        """
        if not isinstance(g, VectorField):
            g = VectorField(self.grid, asarray(g, float))
        n = self.grid.n
        for i in range(n):
            check_boundary_zero(g.values[i], "test vector field")

        # Dg[i][j] = ∂ⱼgᵢ
        Dg = [gradient(g.component(i)).values for i in range(n)]
        nu = self.normal.values
        div = sum(Dg[i][i] for i in range(n))
        normal_part = sum(nu[i] * nu[j] * Dg[i][j] for i in range(n) for j in range(n))
        tr = where(self.support, div - normal_part, 0.0)
        density = tr * self.weight_density().values
        return float((self.grid.weights * density).sum())

    def discrepancy(self, region=None):
        """
        Discrepancy ξ = ε|∇u|²/2 − W(u)/ε and its L¹ norm over ``region``.

        The default region is the interior box obtained by removing 10% of each
        extent from every face.

        Returns
        -------
        field : ScalarField
            ξ at every node.
        L1 : float
            ∫_U |ξ| dx.
        """
        u = self._state.u.values
        eps = self.eps
        xi = ScalarField(self.grid, eps * self._grad2 / 2 - self._state.well.value(u) / eps)
        if region is None:
            region = self.grid.interior()
        return xi, integrate(ScalarField(self.grid, abs(xi.values)), region)

    @cached_property
    def _B(self):
        return second_fundamental_density(self._state.u, self._threshold)

    def B_field(self):
        """
        Diffuse second fundamental form density B_u.
        """
        return ScalarField(self.grid, self._B)

    def nu_field(self):
        """
        Density εB²|∇u|² of the measure ν.
        """
        return ScalarField(self.grid, self.eps * self._B**2 * self._grad2)

    def nu_mass(self, region=None):
        """
        ∫_U εB²|∇u|² over ``region`` (default: interior box).
        """
        if region is None:
            region = self.grid.interior()
        return integrate(self.nu_field(), region)

    def nu_density(self, x0, r):
        """
        Density ratio ν(B_r(x₀))/r^{n−3}.
        """
        ball = self._ball(x0, r)
        return integrate(self.nu_field(), ball) / r ** (self.grid.n - 3)

    def gradient_bound_check(self, margin=2):
        """
        Largest violation of |∇ξ| ≤ ε√(n−1)|∇u|²B over interior nodes.

        Both sides are taken in the blow-up variables y = x/ε, where the
        inequality reads |∇_y ξ̃| ≤ √(n−1)|∇_y ũ|²B̃ with ξ̃ = εξ and B̃ = εB; each
        side is ε² times its value in x. Returns the max of
        (ε²|∇ξ| − ε³√(n−1)|∇u|²B)⁺/(1 + ε³|∇u|²B) over the nodes at least
        ``margin`` nodes away from every face, which is unchanged when ε and h
        shrink together.
        """
        n = self.grid.n
        e2 = self.eps**2
        xi, _ = self.discrepancy()
        dxi = e2 * sqrt((gradient(xi).values ** 2).sum(0))
        eB = e2 * self.eps * self._grad2 * self._B
        excess = (dxi - sqrt(n - 1) * eB).clip(min=0) / (1 + eB)
        sl = tuple(slice(margin, c - margin) for c in self.grid.shape)
        return float(excess[sl].max())

    def monotonicity_ratio(self, x0, r):
        """
        Scaled energy r^{1−n}∫_{B_r(x₀)} ε|∇u|²/2 + W(u)/ε.
        """
        ball = self._ball(x0, r)
        if r < 4 * self.eps:
            warnings.warn("Monotonicity radii below 4ε are not meaningful.", UserWarning)
        return integrate(self.energy_density(), ball) / r ** (self.grid.n - 1)

    def monotonicity_check(self, x0, radii, nquad=32):
        """
        Scaled energies at increasing radii with fitted monotonicity constants.

        For every pair s < r the table records the smallest c with

            ratio(r) − ratio(s) ≥ −c·r

        and the smallest c_full with

            ratio(r) − ratio(s) ≥ ∫ₛʳ τ⁻ⁿ∫_{B_τ}(W/ε − ε|∇u|²/2)⁺ dτ − c_full·r
                                   + ε∫_{B_r∖B_s} ((y − x₀)·∇u)²/|y − x₀|ⁿ⁺¹ dy.

        Parameters
        ----------
        x0 : array_like
            Center.
        radii : sequence of float
            Radii; every ball must lie inside the box.
        nquad : int
            Quadrature nodes of the τ-integral per radius pair.

        Returns
        -------
        MonotonicityTable
        """
        x0 = check_point(x0, self.grid.n, "x0")
        radii = sorted(float(r) for r in radii)
        ratios = [self.monotonicity_ratio(x0, r) for r in radii]

        n = self.grid.n
        eps = self.eps
        w = self.grid.weights
        dist = sqrt(sum((m - c) ** 2 for m, c in zip(self.grid.mesh, x0)))
        xi, _ = self.discrepancy()
        neg = (-xi.values).clip(min=0) * w
        radial = sum((m - c) * g for m, c, g in zip(self.grid.mesh, x0, self.grad.values))
        safe = where(dist > 0, dist, 1.0)
        radial = where(dist > 0, eps * radial**2 / safe ** (n + 1), 0.0) * w

        order = argsort(dist, axis=None, kind="stable")
        dsorted = dist.ravel()[order]
        negcum = cumsum(neg.ravel()[order])
        radcum = cumsum(radial.ravel()[order])

        def cum(c, t):
            k = searchsorted(dsorted, t, side="right")
            return float(c[k - 1]) if k > 0 else 0.0

        c = 0.0
        c_full = 0.0
        for i, s in enumerate(radii):
            for j in range(i + 1, len(radii)):
                r = radii[j]
                diff = ratios[j] - ratios[i]
                c = max(c, -diff / r)
                taus = linspace(s, r, nquad)
                vals = asarray([cum(negcum, t) / t**n for t in taus])
                neg_term = float(((vals[1:] + vals[:-1]) / 2 * (taus[1:] - taus[:-1])).sum())
                rad_term = cum(radcum, r) - cum(radcum, s)
                c_full = max(c_full, (neg_term + rad_term - diff) / r)

        rows = [(tuple(float(v) for v in x0), r, q) for r, q in zip(radii, ratios)]
        return MonotonicityTable(rows, c, c_full)

    def density_ratio(self, x0, r):
        """
        Multiplicity estimate ‖V_ε‖(B_r(x₀))/(ω_{n−1}r^{n−1}).
        """
        ball = self._ball(x0, r)
        n = self.grid.n
        return self.mass(ball) / (unit_ball_volume(n - 1) * r ** (n - 1))

    def exceptional_points(self, r, threshold, points=None, max_points=200):
        """
        Points whose ν-density ratio at radius r exceeds ``threshold``.

        Parameters
        ----------
        r : float
            Radius.
        threshold : float
            Density-ratio threshold.
        points : array_like, optional
            Candidate points, one per row. Defaults to up to ``max_points`` nodes
            of the interior box with |u| ≤ 1/2.

        Returns
        -------
        list of (tuple, float)
            Points with their density ratios, in candidate order.
        """
        if points is None:
            points = self._interface_nodes(max_points)
        out = []
        for p in asarray(points, float).reshape(-1, self.grid.n):
            if not Ball(p, r).inside(self.grid):
                continue
            ratio = self.nu_density(p, r)
            if ratio > threshold:
                out.append((tuple(float(v) for v in p), ratio))
        return out

    def _interface_nodes(self, max_points):
        mask = self.grid.interior().mask(self.grid)
        mask &= abs(self._state.u.values) <= 0.5
        pts = self.grid.points[mask.ravel()]
        stride = max(1, pts.shape[0] // max_points)
        return pts[::stride][:max_points]

    def _ball(self, x0, r):
        x0 = check_point(x0, self.grid.n, "x0")
        r = check_positive(r, "r")
        ball = Ball(x0, r)
        if not ball.inside(self.grid):
            raise ValueError("The ball must lie inside the box.")
        return ball

    def __str__(self):
        params = {"eps": self.eps, "threshold": self._threshold}
        attrs = [("sigma", f"{self.sigma:.8f}"), ("mass", f"{self.mass():.6g}")]
        return format_object(self, params, attrs)
