import pytest
from numpy import array, diag, inf, nan, ones, zeros
from numpy.testing import assert_allclose

from phasefield_core._util import (
    check_boundary_zero,
    check_finite,
    check_point,
    check_positive,
    format_object,
    indefinite_solve,
    spd_solve,
)


def test_util_checks():
    assert_allclose(check_finite([1, 2]), [1.0, 2.0])
    with pytest.raises(ValueError):
        check_finite([1.0, nan])
    with pytest.raises(ValueError):
        check_finite([inf])

    assert check_positive(2, "x") == 2.0
    for x in [0.0, -1.0, inf, nan]:
        with pytest.raises(ValueError):
            check_positive(x, "x")

    assert_allclose(check_point([0.5, 0.5], 2), [0.5, 0.5])
    with pytest.raises(ValueError):
        check_point([0.5], 2)
    with pytest.raises(ValueError):
        check_point([0.5, nan], 2)

    phi = zeros((4, 4))
    phi[1:3, 1:3] = 1.0
    assert_allclose(check_boundary_zero(phi), phi)
    with pytest.raises(ValueError):
        check_boundary_zero(ones((4, 4)))


def test_util_format():
    class Thing:
        pass

    msg = format_object(Thing(), {"a": 1, "b": "x"}, [("values", "[1 2]")])
    assert msg == "Thing(a=1, b=x)\n  values: [1 2]"
    assert format_object(Thing(), {}) == "Thing()"


def test_util_solve():
    A = diag([1.0, 2.0, 4.0])
    b = array([1.0, 1.0, 1.0])
    x, info = spd_solve(lambda v: A @ v, b)
    assert info == 0
    assert_allclose(x, [1.0, 0.5, 0.25])

    x, method, info = indefinite_solve(lambda v: A @ v, b)
    assert method == "cg"
    assert_allclose(x, [1.0, 0.5, 0.25])

    B = diag([1.0, -2.0, 4.0])
    x, method, info = indefinite_solve(lambda v: B @ v, array([0.0, 1.0, 0.0]))
    assert method == "minres"
    assert_allclose(x, [0.0, -0.5, 0.0], atol=1e-8)
