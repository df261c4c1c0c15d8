from numpy import asarray, ones

from .._util import check_point, check_positive, format_object


class Ball:
    """
    Closed ball B_r(x₀) used as an indicator mask.
    """

    def __init__(self, center, radius):
        self._center = asarray(center, float).ravel()
        self._radius = check_positive(radius, "radius")

    @property
    def center(self):
        return self._center

    @property
    def radius(self):
        return self._radius

    def mask(self, grid):
        center = check_point(self._center, grid.n, "center")
        d2 = sum((m - c) ** 2 for m, c in zip(grid.mesh, center))
        return d2 <= self._radius**2

    def inside(self, grid):
        """
        Whether the ball lies inside the grid box.
        """
        c = check_point(self._center, grid.n, "center")
        return grid.contains(c - self._radius, c + self._radius)

    def __str__(self):
        return format_object(self, {"center": list(self._center), "radius": self._radius})


class Box:
    """
    Closed axis-aligned box [low, high] used as an indicator mask.
    """

    def __init__(self, low, high):
        self._low = asarray(low, float).ravel()
        self._high = asarray(high, float).ravel()
        if self._low.shape != self._high.shape:
            raise ValueError("Box corners must have the same dimension.")
        if not (self._high > self._low).all():
            raise ValueError("Box extents must be positive.")

    @property
    def low(self):
        return self._low

    @property
    def high(self):
        return self._high

    def mask(self, grid):
        low = check_point(self._low, grid.n, "low")
        high = check_point(self._high, grid.n, "high")
        m = ones(grid.shape, bool)
        for x, lo, hi in zip(grid.mesh, low, high):
            m &= (x >= lo) & (x <= hi)
        return m

    def inside(self, grid):
        return grid.contains(self._low, self._high)

    def __str__(self):
        return format_object(self, {"low": list(self._low), "high": list(self._high)})


def region_mask(grid, region):
    """
    Boolean node mask of ``region`` (all nodes when ``None``).
    """
    if region is None:
        return ones(grid.shape, bool)
    if hasattr(region, "mask"):
        return region.mask(grid)
    region = asarray(region, bool)
    if region.shape != grid.shape:
        raise ValueError("Explicit masks must have the grid shape.")
    return region
