from numpy import all as npall
from numpy import asarray, isfinite


def check_finite(values, name="values"):
    from numpy_sugar import is_all_finite

    values = asarray(values, float)
    if not is_all_finite(values):
        raise ValueError(f"There are non-finite values in {name}.")
    return values


def check_positive(x, name):
    x = float(x)
    if not (isfinite(x) and x > 0):
        raise ValueError(f"`{name}` must be a positive finite number.")
    return x


def check_point(point, n: int, name="point"):
    point = asarray(point, float).ravel()
    if point.shape[0] != n:
        raise ValueError(f"`{name}` must have {n} coordinates.")
    if not npall(isfinite(point)):
        raise ValueError(f"`{name}` must have finite coordinates.")
    return point


def check_boundary_zero(values, name="test function"):
    """
    Reject arrays that do not vanish on the outermost ring of nodes.
    """
    values = asarray(values, float)
    for axis in range(values.ndim):
        first = values.take(0, axis=axis)
        last = values.take(-1, axis=axis)
        if abs(first).max() > 0 or abs(last).max() > 0:
            msg = f"The {name} must vanish on the boundary ring of the grid."
            raise ValueError(msg)
    return values
