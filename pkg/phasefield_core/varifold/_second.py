from numpy import maximum, sqrt, where

from ..field import gradient, hessian


def _frobenius2(H):
    n = H.shape[0]
    diag = sum(H[i, i] ** 2 for i in range(n))
    off = sum(H[i, j] ** 2 for i in range(n) for j in range(i + 1, n))
    return diag + 2 * off


def second_fundamental_density(u, threshold=1e-12):
    """
    Nodewise B_u ≥ 0 given by

        B² = |∇²u|²/|∇u|² − |∇²u·∇u|²/|∇u|⁴,

    the length of the second fundamental form of the level sets of u. Nodes with
    |∇u| ≤ threshold·max|∇u| get B = 0, and round-off negatives are clamped.

    Parameters
    ----------
    u : ScalarField
        Field.
    threshold : float
        Relative gradient threshold.

    Returns
    -------
    ndarray
        B at every node.
    """
    g = gradient(u).values
    H = hessian(u).values
    n = g.shape[0]
    g2 = (g**2).sum(0)
    gmax = sqrt(g2.max())
    support = sqrt(g2) > threshold * gmax
    safe = where(support, g2, 1.0)

    term1 = _frobenius2(H) / safe
    Hg = [sum(H[i, j] * g[j] for j in range(n)) for i in range(n)]
    term2 = sum(v**2 for v in Hg) / safe**2
    B2 = maximum(term1 - term2, 0.0)
    return where(support, sqrt(B2), 0.0)
