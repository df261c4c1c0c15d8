from numpy import asarray, meshgrid, pad, pi, prod, sin, zeros

from ..field import second_difference

BOUNDARIES = ("neumann", "periodic", "dirichlet")


class Closure:
    """
    Boundary closure of the discrete Laplacian on a grid.

    It maps node values to the unknowns of a closed problem and back:

    - ``"neumann"``: every node is an unknown; mirror ghost nodes.
    - ``"periodic"``: the last node along every axis is a copy of the first one
      and is dropped from the unknowns.
    - ``"dirichlet"``: only interior nodes are unknowns; the boundary ring is zero.

    Unknowns carry quadrature weights for which ``weights·(−Δ)`` is symmetric.
    """

    def __init__(self, grid, kind):
        if kind not in BOUNDARIES:
            raise ValueError(f"Unknown boundary closure `{kind}`.")
        self._grid = grid
        self._kind = kind

    @property
    def kind(self):
        return self._kind

    @property
    def grid(self):
        return self._grid

    @property
    def shape(self):
        s = self._grid.shape
        if self._kind == "periodic":
            return tuple(c - 1 for c in s)
        if self._kind == "dirichlet":
            return tuple(c - 2 for c in s)
        return s

    @property
    def weights(self):
        if self._kind == "neumann":
            return self._grid.weights
        return zeros(self.shape) + float(prod(self._grid.h))

    def reduce(self, values):
        values = asarray(values, float)
        if self._kind == "periodic":
            return values[tuple(slice(0, -1) for _ in range(values.ndim))]
        if self._kind == "dirichlet":
            return values[tuple(slice(1, -1) for _ in range(values.ndim))]
        return values

    def extend(self, x):
        x = asarray(x, float).reshape(self.shape)
        if self._kind == "periodic":
            return pad(x, [(0, 1)] * x.ndim, mode="wrap")
        if self._kind == "dirichlet":
            return pad(x, [(1, 1)] * x.ndim, mode="constant")
        return x

    def laplacian(self, x):
        """
        Closed Laplacian applied to unknowns ``x``.
        """
        x = asarray(x, float).reshape(self.shape)
        out = zeros(self.shape)
        for a, h in enumerate(self._grid.h):
            if self._kind == "periodic":
                # a periodic reduced array is closed by padding one wrapped node
                w = pad(x, [(0, 1) if b == a else (0, 0) for b in range(x.ndim)], mode="wrap")
                out += second_difference(w, h, a, "periodic").take(range(x.shape[a]), axis=a)
            else:
                out += second_difference(x, h, a, self._kind)
        return out

    def symbol(self):
        """
        Eigenvalues of the closed Laplacian in its diagonalising transform.
        """
        parts = []
        for c, h in zip(self.shape, self._grid.h):
            k = asarray(range(c), float)
            if self._kind == "neumann":
                lam = -(4 / h**2) * sin(pi * k / (2 * (c - 1))) ** 2
            elif self._kind == "periodic":
                lam = -(4 / h**2) * sin(pi * k / c) ** 2
            else:
                lam = -(4 / h**2) * sin(pi * (k + 1) / (2 * (c + 1))) ** 2
            parts.append(lam)
        return sum(meshgrid(*parts, indexing="ij"))

    def solve_shifted(self, rhs, a, b):
        """
        Solve (a − bΔ)x = rhs by the fast transform of the closure.
        """
        from scipy.fft import dctn, dstn, fftn, idctn, idstn, ifftn

        rhs = asarray(rhs, float).reshape(self.shape)
        denom = a - b * self.symbol()
        if self._kind == "neumann":
            return idctn(dctn(rhs, type=1) / denom, type=1)
        if self._kind == "periodic":
            return ifftn(fftn(rhs) / denom).real
        return idstn(dstn(rhs, type=1) / denom, type=1)
