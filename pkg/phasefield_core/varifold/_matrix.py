from numpy import asarray, sqrt, trace
from numpy.linalg import norm


def matrix_inequality_check(M, m):
    """
    Both sides of |M·m − (tr M)m| ≤ √(n−1)·(tr(M²) − mᵀM²m)^{1/2}.

    The inequality holds for every symmetric n×n matrix M and unit vector m; it
    is the pointwise step behind the gradient bound on the discrepancy.

    Example
    -------

    .. doctest::

        >>> from numpy import eye
        >>> from phasefield_core.varifold import matrix_inequality_check
        >>>
        >>> lhs, rhs = matrix_inequality_check(eye(3), [1.0, 0.0, 0.0])
        >>> print(f"{lhs:.6f} {rhs:.6f}")
        2.000000 2.000000

    Returns
    -------
    lhs : float
    rhs : float
    """
    M = asarray(M, float)
    m = asarray(m, float).ravel()
    n = M.shape[0]
    if M.shape != (n, n) or m.shape[0] != n:
        raise ValueError("`M` must be square and match the dimension of `m`.")
    if abs(M - M.T).max() > 1e-12 * max(1.0, abs(M).max()):
        raise ValueError("`M` must be symmetric.")
    if abs(norm(m) - 1) > 1e-10:
        raise ValueError("`m` must be a unit vector.")

    lhs = float(norm(M @ m - trace(M) * m))
    M2 = M @ M
    rhs = float(sqrt(n - 1) * sqrt(max(trace(M2) - m @ M2 @ m, 0.0)))
    return lhs, rhs
