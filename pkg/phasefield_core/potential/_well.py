from functools import cached_property

from numpy import asarray, diff, isfinite, linspace, sign, sqrt

from .._util import check_finite, check_positive, format_object


class DoubleWell:
    """
    Double-well potential W with two nondegenerate zeros at ±1.

    Subclasses provide W, W′ and W″. Everything derived from W alone lives here:
    the surface tension

        σ = ∫₋₁¹ √(W(s)/2) ds,

    the interior critical point and the standing-wave profile q₀.

    A valid well satisfies W ≥ 0, W(±1) = 0, W″(±1) > 0, and W′ changes sign
    exactly three times on (−A, A): minima at ±1 and one interior maximum.
    """

    kind = None

    @property
    def bound(self):
        """
        Half-width A of the interval [−A, A] on which W is defined.
        """
        return 2.0

    def value(self, s):
        raise NotImplementedError

    def derivative(self, s):
        raise NotImplementedError

    def second_derivative(self, s):
        raise NotImplementedError

    def eval(self, s, order=0):
        """
        Evaluate W, W′ or W″.

        Parameters
        ----------
        s : array_like
            Arguments.
        order : int
            ``0``, ``1`` or ``2``.

        Returns
        -------
        ndarray or float
            W(s), W′(s) or W″(s).
        """
        if order == 0:
            return self.value(s)
        if order == 1:
            return self.derivative(s)
        if order == 2:
            return self.second_derivative(s)
        raise ValueError("`order` must be 0, 1 or 2.")

    def critical_points(self):
        """
        Critical points of W in [−1, 1].

        Returns
        -------
        tuple
            (−1, s*, 1) where s* is the interior local maximum, located by a
            bracketed Brent search on −W.
        """
        from brent_search import brent

        x, _, _ = brent(lambda s: -float(self.value(s)), -1.0, 1.0, rtol=1e-14, atol=1e-14)
        return (-1.0, float(x), 1.0)

    @cached_property
    def sigma(self):
        """
        Surface tension σ = ∫₋₁¹ √(W/2) ds by adaptive quadrature.
        """
        from scipy.integrate import quad

        smax = self.critical_points()[1]

        def integrand(s):
            return sqrt(max(float(self.value(s)), 0.0) / 2)

        val, _ = quad(integrand, -1.0, 1.0, points=[smax], epsabs=1e-13, epsrel=1e-13, limit=200)
        return val

    @cached_property
    def profile(self):
        """
        Standing-wave profile q₀ of this well.
        """
        from ._wave import StandingWave

        return StandingWave(self)

    def validate(self, nsamples=10_000, tol=1e-8):
        """
        Certify the double-well hypotheses by sampling.

        Raises
        ------
        ValueError
            If any of the sampled conditions fails.
        """
        A = self.bound
        s = linspace(-A, A, nsamples)
        W = asarray(self.value(s), float)
        if not isfinite(W).all():
            raise ValueError("The potential has non-finite samples.")
        if W.min() < -tol:
            raise ValueError("The potential must be nonnegative.")
        if abs(float(self.value(-1.0))) > tol or abs(float(self.value(1.0))) > tol:
            raise ValueError("The potential must vanish at -1 and +1.")
        if not (self.second_derivative(-1.0) > 0 and self.second_derivative(1.0) > 0):
            raise ValueError("The potential must have nondegenerate minima at -1 and +1.")

        d = sign(asarray(self.derivative(s), float))
        d = d[d != 0]
        nchanges = int((diff(d) != 0).sum())
        if nchanges != 3:
            msg = f"The derivative of the potential changes sign {nchanges} times"
            msg += " instead of three."
            raise ValueError(msg)
        return self

    def scaled(self, c):
        """
        Potential c·W.
        """
        return ScaledWell(self, c)

    @staticmethod
    def from_csv(filepath):
        """
        Load a tabulated well from a two-column CSV file (s, W(s)).

        The first line is a header and is required.
        """
        import csv

        with open(filepath, newline="") as f:
            rows = list(csv.reader(f))

        if len(rows) == 0:
            raise ValueError("The well file is empty.")
        if _is_numeric_row(rows[0]):
            raise ValueError("The well file must start with a header line.")

        data = [r for r in rows[1:] if len(r) > 0]
        if any(len(r) != 2 for r in data):
            raise ValueError("The well file must have exactly two columns.")
        nodes = [float(r[0]) for r in data]
        values = [float(r[1]) for r in data]
        return TabulatedWell(nodes, values)

    def _params(self):
        return {}

    def __str__(self):
        params = {"kind": self.kind}
        params.update(self._params())
        return format_object(self, params, [("sigma", f"{self.sigma:.10f}")])


class QuarticWell(DoubleWell):
    """
    Quartic well W(s) = (1 − s²)²/4.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.potential import QuarticWell
        >>>
        >>> well = QuarticWell()
        >>> print(well.value(0.0))
        0.25
        >>> print(well.second_derivative(1.0))
        2.0
        >>> print(f"{well.sigma:.7f}")
        0.4714045
    """

    kind = "quartic"

    def value(self, s):
        s = asarray(s, float)
        return (1 - s**2) ** 2 / 4

    def derivative(self, s):
        s = asarray(s, float)
        return s**3 - s

    def second_derivative(self, s):
        s = asarray(s, float)
        return 3 * s**2 - 1

    def critical_points(self):
        return (-1.0, 0.0, 1.0)


class TabulatedWell(DoubleWell):
    """
    Well given by samples on [−A, A], A ≥ 2, and cubic interpolation.

    Parameters
    ----------
    nodes : array_like
        Strictly increasing sample positions.
    values : array_like
        W at the nodes.
    """

    kind = "tabulated"

    def __init__(self, nodes, values):
        from scipy.interpolate import CubicSpline

        nodes = check_finite(nodes, "the well nodes").ravel()
        values = check_finite(values, "the well values").ravel()
        if nodes.shape != values.shape:
            raise ValueError("Nodes and values must have the same length.")
        if nodes.shape[0] < 4:
            raise ValueError("At least four samples are needed for cubic interpolation.")
        if not (diff(nodes) > 0).all():
            raise ValueError("Nodes must be strictly increasing.")
        if nodes[0] > -2.0 or nodes[-1] < 2.0:
            raise ValueError("Tabulated wells must cover at least [-2, 2].")

        self._nodes = nodes
        self._values = values
        self._spline = CubicSpline(nodes, values)
        self._d1 = self._spline.derivative(1)
        self._d2 = self._spline.derivative(2)
        self.validate()

    @property
    def bound(self):
        return float(min(-self._nodes[0], self._nodes[-1]))

    @property
    def nodes(self):
        return self._nodes

    @property
    def values(self):
        return self._values

    def _check_range(self, s):
        s = asarray(s, float)
        if (s < self._nodes[0]).any() or (s > self._nodes[-1]).any():
            raise ValueError("Argument outside the tabulated range of the well.")
        return s

    def value(self, s):
        return self._spline(self._check_range(s))

    def derivative(self, s):
        return self._d1(self._check_range(s))

    def second_derivative(self, s):
        return self._d2(self._check_range(s))

    def _params(self):
        return {"nsamples": self._nodes.shape[0], "bound": self.bound}


class ScaledWell(DoubleWell):
    """
    Potential c·W for a positive constant c.
    """

    kind = "scaled"

    def __init__(self, well, c):
        self._well = well
        self._c = check_positive(c, "c")

    @property
    def bound(self):
        return self._well.bound

    @property
    def base(self):
        return self._well

    @property
    def factor(self):
        return self._c

    def value(self, s):
        return self._c * self._well.value(s)

    def derivative(self, s):
        return self._c * self._well.derivative(s)

    def second_derivative(self, s):
        return self._c * self._well.second_derivative(s)

    def critical_points(self):
        return self._well.critical_points()

    def _params(self):
        return {"factor": self._c, "base": self._well.kind}


def eval_well(well, s, order=0):
    """
    W(s), W′(s) or W″(s) for ``order`` 0, 1 or 2.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.potential import QuarticWell, eval_well
        >>>
        >>> print(eval_well(QuarticWell(), 1.0, 2))
        2.0
    """
    return well.eval(s, order)


def sigma(well):
    """
    Surface tension σ = ∫₋₁¹ √(W/2) ds of the well.
    """
    return well.sigma


def _is_numeric_row(row):
    try:
        [float(c) for c in row]
    except ValueError:
        return False
    return True
