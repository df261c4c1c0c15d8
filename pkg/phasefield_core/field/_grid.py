from functools import cached_property

from numpy import asarray, ceil, isfinite, linspace, meshgrid, ones, prod, stack

from .._util import format_object


class Grid:
    """
    Uniform rectangular grid of dimension n ∈ {1, 2, 3}.

    The node spacing along axis a is hₐ = (highₐ − lowₐ)/(countₐ − 1), so both
    faces of the box carry nodes.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.field import Grid
        >>>
        >>> grid = Grid([(0.0, 1.0), (0.0, 2.0)], (11, 21))
        >>> print(grid.h)
        (0.1, 0.1)
        >>> print(grid)
        Grid(n=2, shape=(11, 21))
          box: [(0.0, 1.0), (0.0, 2.0)]

    Parameters
    ----------
    box : sequence of (float, float)
        Per-axis (low, high).
    shape : sequence of int
        Per-axis node counts, each at least 8.
    """

    def __init__(self, box, shape):
        box = [(float(lo), float(hi)) for lo, hi in box]
        shape = tuple(int(c) for c in shape)
        if len(box) not in (1, 2, 3):
            raise ValueError("Grids must have dimension 1, 2 or 3.")
        if len(shape) != len(box):
            raise ValueError("The box and the shape must have the same dimension.")
        for lo, hi in box:
            if not (isfinite(lo) and isfinite(hi)):
                raise ValueError("The box must have finite bounds.")
            if not hi > lo:
                raise ValueError("The box must have positive extents.")
        if min(shape) < 8:
            raise ValueError("Every axis needs at least 8 nodes.")

        self._box = box
        self._shape = shape

    @classmethod
    def from_spacing(cls, box, h):
        """
        Grid covering ``box`` with spacing at most ``h`` along every axis.
        """
        shape = []
        for lo, hi in box:
            shape.append(max(8, int(ceil((hi - lo) / h - 1e-9)) + 1))
        return cls(box, shape)

    @property
    def n(self):
        """
        Dimension.
        """
        return len(self._shape)

    @property
    def box(self):
        return list(self._box)

    @property
    def shape(self):
        return self._shape

    @property
    def size(self):
        return int(prod(self._shape))

    @property
    def low(self):
        return asarray([b[0] for b in self._box])

    @property
    def high(self):
        return asarray([b[1] for b in self._box])

    @cached_property
    def h(self):
        """
        Per-axis spacing.
        """
        return tuple((hi - lo) / (c - 1) for (lo, hi), c in zip(self._box, self._shape))

    @property
    def hmax(self):
        return max(self.h)

    @cached_property
    def axes(self):
        """
        Node coordinates along each axis.
        """
        return tuple(linspace(lo, hi, c) for (lo, hi), c in zip(self._box, self._shape))

    @cached_property
    def mesh(self):
        """
        Coordinate arrays, one per axis, each of the grid shape.
        """
        return tuple(meshgrid(*self.axes, indexing="ij"))

    @cached_property
    def points(self):
        """
        Node coordinates as a (size, n) array in row-major order.
        """
        return stack([m.ravel() for m in self.mesh], axis=1)

    def axis_weights(self, axis):
        """
        One-dimensional trapezoidal weights along ``axis``, shaped to broadcast.
        """
        h = self.h[axis]
        c = self._shape[axis]
        w = ones(c) * h
        w[0] = w[-1] = h / 2
        shape = [1] * self.n
        shape[axis] = c
        return w.reshape(shape)

    @cached_property
    def weights(self):
        """
        Trapezoidal quadrature weights of every node.
        """
        w = ones(self._shape)
        for a in range(self.n):
            w = w * self.axis_weights(a)
        return w

    @property
    def volume(self):
        return float(prod(self.high - self.low))

    def interior(self, shrink=0.1):
        """
        Sub-box obtained by removing ``shrink`` of each extent from every face.
        """
        from ._region import Box

        ext = self.high - self.low
        return Box(self.low + shrink * ext, self.high - shrink * ext)

    def contains(self, low, high, tol=1e-12):
        """
        Whether the box [low, high] lies inside the grid box.
        """
        low = asarray(low, float)
        high = asarray(high, float)
        slack = tol * (self.high - self.low)
        return bool((low >= self.low - slack).all() and (high <= self.high + slack).all())

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self._box == other._box and self._shape == other._shape

    def __hash__(self):
        return hash((tuple(self._box), self._shape))

    def __str__(self):
        params = {"n": self.n, "shape": self._shape}
        return format_object(self, params, [("box", self._box)])
