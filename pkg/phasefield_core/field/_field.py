from numpy import asarray, sqrt

from .._util import check_finite, format_object


def _frozen(values):
    values = values.copy()
    values.setflags(write=False)
    return values


class ScalarField:
    """
    Real function sampled at the nodes of a grid.

    Values are stored with the grid shape; ``flat`` gives the row-major vector.
    The field is immutable after construction.

    Parameters
    ----------
    grid : Grid
        Sampling grid.
    values : array_like
        Either the grid shape or a flat row-major array with ``grid.size`` entries.
    """

    def __init__(self, grid, values):
        values = check_finite(values, "the field values")
        if values.size != grid.size:
            raise ValueError("The number of values must match the number of grid nodes.")
        self._grid = grid
        self._values = _frozen(values.reshape(grid.shape))

    @classmethod
    def from_function(cls, grid, func):
        """
        Sample ``func(*mesh)`` on the grid.
        """
        return cls(grid, func(*grid.mesh))

    @classmethod
    def constant(cls, grid, value):
        from numpy import full

        return cls(grid, full(grid.shape, float(value)))

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    @property
    def flat(self):
        return self._values.ravel()

    def sup(self):
        """
        Maximum absolute value.
        """
        return float(abs(self._values).max())

    def evolve(self, values):
        """
        New field on the same grid.
        """
        return ScalarField(self._grid, values)

    def __str__(self):
        params = {"shape": self._grid.shape}
        return format_object(self, params, [("sup", f"{self.sup():.6g}")])


class VectorField:
    """
    n-component field sharing one grid.

    Parameters
    ----------
    grid : Grid
        Sampling grid.
    components : array_like
        Array of shape (n, *grid.shape).
    """

    def __init__(self, grid, components):
        components = check_finite(components, "the vector field")
        if components.shape != (grid.n,) + grid.shape:
            raise ValueError("Vector fields need one component per grid axis.")
        self._grid = grid
        self._values = _frozen(components)

    @classmethod
    def from_scalars(cls, fields):
        fields = list(fields)
        grid = fields[0].grid
        if any(f.grid != grid for f in fields):
            raise ValueError("All components must share the same grid.")
        return cls(grid, asarray([f.values for f in fields]))

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    def component(self, i):
        return ScalarField(self._grid, self._values[i])

    def norm(self):
        """
        Pointwise Euclidean norm.
        """
        return ScalarField(self._grid, sqrt((self._values**2).sum(0)))

    def sup(self):
        return float(sqrt((self._values**2).sum(0)).max())

    def __len__(self):
        return self._values.shape[0]

    def __str__(self):
        params = {"n": self._grid.n, "shape": self._grid.shape}
        return format_object(self, params, [("sup", f"{self.sup():.6g}")])


class TensorField:
    """
    Symmetric n×n field bundle, stored as an array of shape (n, n, *grid.shape).
    """

    def __init__(self, grid, entries):
        entries = check_finite(entries, "the tensor field")
        if entries.shape != (grid.n, grid.n) + grid.shape:
            raise ValueError("Tensor fields need n×n components per node.")
        self._grid = grid
        self._values = _frozen(entries)

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    def entry(self, i, j):
        return ScalarField(self._grid, self._values[i, j])

    def trace(self):
        n = self._grid.n
        return ScalarField(self._grid, sum(self._values[i, i] for i in range(n)))

    def frobenius2(self):
        """
        Pointwise Σᵢⱼ Mᵢⱼ².
        """
        return ScalarField(self._grid, (self._values**2).sum((0, 1)))

    def __str__(self):
        return format_object(self, {"n": self._grid.n, "shape": self._grid.shape})
