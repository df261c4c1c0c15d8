import warnings

from numpy import dot, isfinite, sqrt, zeros_like


def _operator(matvec, n):
    from scipy.sparse.linalg import LinearOperator

    return LinearOperator((n, n), matvec=matvec, dtype=float)


def spd_solve(matvec, b, x0=None, rtol=1e-10, maxiter=None, precond=None):
    """
    Solve 𝙰𝐱 = 𝐛 for a symmetric positive-definite operator via conjugate gradients.

    Parameters
    ----------
    matvec : callable
        Function returning 𝙰𝐱 for a flat vector 𝐱.
    b : ndarray
        Right-hand side, flat.
    x0 : ndarray, optional
        Initial guess.
    rtol : float
        Relative residual tolerance.
    maxiter : int, optional
        Maximum number of iterations.
    precond : callable, optional
        Function returning an approximation of 𝙰⁻¹𝐱.

    Returns
    -------
    x : ndarray
        Approximate solution.
    info : int
        ``0`` on convergence, ``>0`` when the iteration limit was reached and ``<0``
        on breakdown.
    """
    from scipy.sparse.linalg import cg

    A = _operator(matvec, b.shape[0])
    M = None if precond is None else _operator(precond, b.shape[0])
    x, info = cg(A, b, x0=x0, rtol=rtol, atol=0.0, maxiter=maxiter, M=M)
    if not isfinite(x).all():
        return x, -1
    return x, info


def indefinite_solve(matvec, b, rtol=1e-10, maxiter=None):
    """
    Solve a symmetric, possibly indefinite, system 𝙰𝐱 = 𝐛.

    Conjugate gradients are tried first. As soon as a search direction 𝐩 with
    𝐩ᵀ𝙰𝐩 ≤ 0 shows up the operator is known to be indefinite and the solve is
    restarted with the minimal-residual method.

    Returns
    -------
    x : ndarray
        Approximate solution.
    method : str
        ``"cg"`` or ``"minres"``.
    info : int
        Convergence flag of the method that produced ``x``.
    """
    n = b.shape[0]
    if maxiter is None:
        maxiter = 10 * n

    x, info = _curvature_cg(matvec, b, rtol, maxiter)
    if info >= 0:
        return x, "cg", info

    from scipy.sparse.linalg import minres

    A = _operator(matvec, n)
    x, info = minres(A, b, rtol=rtol, maxiter=maxiter)
    if info != 0:
        warnings.warn("MINRES did not reach the requested tolerance.", RuntimeWarning)
    return x, "minres", info


def _curvature_cg(matvec, b, rtol, maxiter):
    x = zeros_like(b)
    r = b.copy()
    p = r.copy()
    rr = dot(r, r)
    stop = (rtol * sqrt(dot(b, b))) ** 2
    if rr <= stop:
        return x, 0

    for _ in range(maxiter):
        Ap = matvec(p)
        curvature = dot(p, Ap)
        if curvature <= 0:
            return x, -1
        alpha = rr / curvature
        x += alpha * p
        r -= alpha * Ap
        rr_new = dot(r, r)
        if rr_new <= stop:
            return x, 0
        p = r + (rr_new / rr) * p
        rr = rr_new

    return x, 1
