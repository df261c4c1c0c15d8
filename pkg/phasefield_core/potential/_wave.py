from numpy import asarray, concatenate, exp, log, maximum, minimum, sqrt, where

from .._util import check_positive, format_object

_GAP = 1e-10


class StandingWave:
    """
    Heteroclinic profile q₀ with q₀″ = W′(q₀) and q₀(±∞) = ±1.

    The profile is computed from the first-order reduction q₀′ = √(2W(q₀)),
    integrated forward and backward from q₀(0) = s* (the interior maximum of W)
    by adaptive Runge-Kutta stepping until q₀ is within 10⁻¹⁰ of ±1. Between the
    tabulated points q₀ is a cubic Hermite interpolant using the exact slopes
    √(2W(q₀)); beyond them it continues with the exponential tails
    1 ∓ c·exp(∓√W″(±1)·t).

    Parameters
    ----------
    well : DoubleWell
        Potential.
    max_step : float
        Maximum integration step in units of t.
    """

    def __init__(self, well, max_step=0.02):
        from scipy.integrate import solve_ivp
        from scipy.interpolate import CubicHermiteSpline

        self._well = well
        smax = well.critical_points()[1]

        def rhs(_, q):
            return sqrt(2 * maximum(well.value(minimum(maximum(q, -1.0), 1.0)), 0.0))

        def top(_, q):
            return q[0] - (1 - _GAP)

        def bottom(_, q):
            return q[0] - (-1 + _GAP)

        top.terminal = True
        bottom.terminal = True

        opts = dict(method="RK45", rtol=1e-12, atol=1e-14, max_step=max_step)
        fwd = solve_ivp(rhs, (0.0, 500.0), [smax], events=top, **opts)
        bwd = solve_ivp(lambda t, q: -rhs(t, q), (0.0, 500.0), [smax], events=bottom, **opts)
        if fwd.status < 0 or bwd.status < 0:
            raise ValueError("Failed to integrate the standing-wave profile.")

        t = concatenate([-bwd.t[::-1], fwd.t[1:]])
        q = concatenate([bwd.y[0][::-1], fwd.y[0][1:]])
        if not (t[1:] > t[:-1]).all() or not (q[1:] > q[:-1]).all():
            raise ValueError("The standing-wave profile is not strictly increasing.")

        dq = self._slope(q)
        self._t = t
        self._q = q
        self._spline = CubicHermiteSpline(t, q, dq)
        self._dspline = self._spline.derivative()
        self._rate_hi = sqrt(float(well.second_derivative(1.0)))
        self._rate_lo = sqrt(float(well.second_derivative(-1.0)))

    def _slope(self, q):
        return sqrt(2 * maximum(self._well.value(q), 0.0))

    @property
    def well(self):
        return self._well

    @property
    def nodes(self):
        """
        Tabulated arguments t.
        """
        return self._t

    @property
    def samples(self):
        """
        Tabulated profile values q₀(t).
        """
        return self._q

    @property
    def interval(self):
        """
        Tabulated interval [t₋, t₊].
        """
        return (float(self._t[0]), float(self._t[-1]))

    def __call__(self, t):
        t = asarray(t, float)
        lo, hi = self.interval
        inner = self._spline(minimum(maximum(t, lo), hi))
        upper = 1 - (1 - self._q[-1]) * exp(-self._rate_hi * maximum(t - hi, 0.0))
        lower = -1 + (self._q[0] + 1) * exp(self._rate_lo * minimum(t - lo, 0.0))
        out = where(t > hi, upper, where(t < lo, lower, inner))
        return minimum(maximum(out, -1.0), 1.0)

    def derivative(self, t):
        """
        q₀′(t).
        """
        t = asarray(t, float)
        lo, hi = self.interval
        inner = self._dspline(minimum(maximum(t, lo), hi))
        upper = self._rate_hi * (1 - self._q[-1]) * exp(-self._rate_hi * maximum(t - hi, 0.0))
        lower = self._rate_lo * (self._q[0] + 1) * exp(self._rate_lo * minimum(t - lo, 0.0))
        return where(t > hi, upper, where(t < lo, lower, inner))

    def inverse(self, s):
        """
        q₀⁻¹(s) for s ∈ (−1, 1).
        """
        from scipy.optimize import brentq

        s = float(s)
        if not -1 < s < 1:
            raise ValueError("The profile inverse is defined on (-1, 1) only.")
        lo, hi = self.interval
        if s <= self._q[0]:
            return lo + float(log((s + 1) / (self._q[0] + 1))) / self._rate_lo
        if s >= self._q[-1]:
            return hi - float(log((1 - s) / (1 - self._q[-1]))) / self._rate_hi
        return brentq(lambda x: float(self._spline(x)) - s, lo, hi, xtol=1e-14)

    def equipartition_defect(self):
        """
        max |q₀′²/2 − W(q₀)| over the tabulated points.
        """
        dq = self._dspline(self._t)
        return float(abs(dq**2 / 2 - self._well.value(self._q)).max())

    def __str__(self):
        lo, hi = self.interval
        params = {"well": self._well.kind}
        return format_object(self, params, [("interval", f"[{lo:.4f}, {hi:.4f}]")])


def standing_wave(well, eps, x):
    """
    Scaled standing wave q₀(x/ε), a 1D solution of −εu″ + W′(u)/ε = 0.

    Example
    -------

    .. doctest::

        >>> from numpy import arctanh, sqrt
        >>> from phasefield_core.potential import QuarticWell, standing_wave
        >>>
        >>> x = 0.1 * sqrt(2) * arctanh(0.5)
        >>> print(f"{float(standing_wave(QuarticWell(), 0.1, x)):.8f}")
        0.50000000
    """
    eps = check_positive(eps, "eps")
    return well.profile(asarray(x, float) / eps)
