from numpy import asarray

from ..field import region_mask


def hausdorff_distance(A, B):
    """
    Symmetric Hausdorff distance between two finite point sets.

    Example
    -------

    .. doctest::

        >>> from phasefield_core.slicing import hausdorff_distance
        >>>
        >>> print(hausdorff_distance([[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.5]]))
        1.118033988749895
    """
    from scipy.spatial import cKDTree

    A = _points(A)
    B = _points(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError("Point sets must have the same dimension.")
    dab, _ = cKDTree(B).query(A)
    dba, _ = cKDTree(A).query(B)
    return float(max(dab.max(), dba.max()))


def _points(P):
    P = asarray(P, float)
    if P.ndim == 1:
        P = P.reshape(-1, 1)
    if P.shape[0] == 0:
        raise ValueError("Point sets must not be empty.")
    return P


def level_band(u, s, region=None):
    """
    Nodes of {|u| ≤ s} inside ``region`` (default: the interior box).
    """
    grid = u.grid
    if region is None:
        region = grid.interior()
    mask = region_mask(grid, region) & (abs(u.values) <= s)
    return grid.points[mask.ravel()]
