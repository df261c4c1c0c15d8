import json
import warnings

from numpy import pi, sqrt

from .._util import format_object, spd_solve
from ..field import ScalarField
from ..solver import Closure


class EigenReport:
    """
    Smallest eigenpair of L = −εΔₕ + W″(u)/ε with Dirichlet closure.

    Attributes
    ----------
    lambda_min : float
        Smallest eigenvalue, in units of 1/length.
    eigenfield : ScalarField
        Eigenfield of unit L² norm, zero on the boundary ring.
    iterations : int
        Number of inverse-iteration steps.
    residual : float
        ‖Lψ − λψ‖₂.
    converged : bool
        Whether the residual met 10⁻⁶|λ| + 10⁻¹⁰.
    """

    def __init__(self, lambda_min, eigenfield, iterations, residual, converged):
        self.lambda_min = float(lambda_min)
        self.eigenfield = eigenfield
        self.iterations = int(iterations)
        self.residual = float(residual)
        self.converged = bool(converged)

    def to_dict(self):
        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "lambda_min": self.lambda_min,
            "residual": self.residual,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["lambda_min"], None, d["iterations"], d["residual"], d.get("converged", True))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __str__(self):
        params = {"iterations": self.iterations, "converged": self.converged}
        attrs = [("lambda_min", f"{self.lambda_min:.8g}"), ("residual", f"{self.residual:.3e}")]
        return format_object(self, params, attrs)


def min_eigenvalue(s, tol=1e-6, maxiter=200, max_retries=3, verbose=False):
    """
    Smallest eigenvalue of the linearised operator by shifted inverse iteration.

    The shift σ₀ = min W″(u)/ε − δ lies below the Gershgorin lower bound of L, so
    L − σ₀ is positive definite and every inner solve is a preconditioned
    conjugate-gradient solve. The preconditioner is the fast sine-transform
    inverse of −εΔₕ + c for a constant c. On inner breakdown δ grows tenfold,
    up to ``max_retries`` times.

    Parameters
    ----------
    s : PhaseState
        State u.
    tol : float
        Relative eigen-residual tolerance.
    maxiter : int
        Maximum number of inverse-iteration steps.

    Returns
    -------
    EigenReport
        Eigenpair and convergence information.
    """
    from numpy import ones
    from tqdm import tqdm

    grid = s.grid
    eps = s.eps
    closure = Closure(grid, "dirichlet")
    wvol = float(closure.weights.flat[0])
    curv = (s.well.second_derivative(closure.reduce(s.u.values)) / eps).ravel()
    lengths = grid.high - grid.low
    delta = 1e-2 * eps * float(((pi / lengths) ** 2).sum())

    def L(x):
        return -eps * closure.laplacian(x).ravel() + curv * x.ravel()

    for attempt in range(max_retries + 1):
        shift = float(curv.min()) - delta
        pshift = max(float(curv.mean()) - shift, delta)

        def matvec(x):
            return L(x) - shift * x.ravel()

        def precond(x):
            return closure.solve_shifted(x, pshift, eps).ravel()

        x = ones(curv.shape[0])
        x /= sqrt(wvol * (x @ x))
        lam = float(x @ L(x)) / float(x @ x)
        res = float("inf")
        broke = False
        it = 0
        for it in tqdm(range(1, maxiter + 1), desc="Eigen", disable=not verbose):
            y, info = spd_solve(matvec, x, x0=x / (lam - shift), rtol=1e-12, precond=precond)
            if info < 0:
                broke = True
                break
            x = y / sqrt(wvol * (y @ y))
            Lx = L(x)
            lam = float(x @ Lx) / float(x @ x)
            res = float(sqrt(wvol * ((Lx - lam * x) @ (Lx - lam * x))))
            if res <= tol * abs(lam) + 1e-10:
                break

        if not broke:
            break
        if attempt < max_retries:
            warnings.warn("Inner solve broke down; retrying with a larger shift.", RuntimeWarning)
            delta *= 10

    converged = (not broke) and res <= tol * abs(lam) + 1e-10
    if not converged:
        warnings.warn("Smallest-eigenvalue iteration did not converge.", RuntimeWarning)

    if x.sum() < 0:
        x = -x
    field = ScalarField(grid, closure.extend(x))
    return EigenReport(lam, field, it, res, converged)
