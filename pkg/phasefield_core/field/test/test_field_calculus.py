from numpy import cos, exp, pi, sin
from numpy.random import RandomState
from numpy.testing import assert_allclose

from phasefield_core.field import (
    Grid,
    ScalarField,
    gradient,
    hessian,
    laplacian,
    random_bumps,
    staggered_gradient_energy,
)


def _inner(values, width=2):
    sl = tuple(slice(width, -width) for _ in range(values.ndim))
    return values[sl]


def test_field_gradient_exact():
    grid = Grid([(0.0, 1.0), (-1.0, 2.0)], (9, 17))

    g = gradient(ScalarField.constant(grid, 3.5))
    assert_allclose(g.values, 0.0, atol=1e-12)

    g = gradient(ScalarField.from_function(grid, lambda x, y: x))
    assert_allclose(g.values[0], 1.0, atol=1e-12)
    assert_allclose(g.values[1], 0.0, atol=1e-12)


def test_field_gradient_order():
    errs = []
    for c in [17, 33, 65]:
        grid = Grid([(0.0, 2.0), (0.0, 1.0)], (c, 9))
        f = ScalarField.from_function(grid, lambda x, y: sin(x))
        g = gradient(f)
        errs.append(abs(g.values[0] - cos(grid.mesh[0])).max())
    assert_allclose(errs[0] / errs[1], 4.0, rtol=0.15)
    assert_allclose(errs[1] / errs[2], 4.0, rtol=0.1)


def test_field_laplacian_quadratic():
    for n in [1, 2, 3]:
        grid = Grid([(-1.0, 1.0)] * n, (9,) * n)
        f = ScalarField.from_function(grid, lambda *x: sum(xi**2 for xi in x) / 2)
        assert_allclose(laplacian(f).values, n, atol=1e-10)


def test_field_laplacian_closures():
    grid = Grid([(0.0, 1.0)], (11,))
    f = ScalarField.from_function(grid, lambda x: cos(pi * x))
    lap = laplacian(f, "neumann").values
    h = grid.h[0]
    # exact discrete eigenfunction of the mirrored stencil
    assert_allclose(lap, -(4 / h**2) * sin(pi * h / 2) ** 2 * f.values, atol=1e-9)

    one = ScalarField.constant(grid, 1.0)
    assert_allclose(laplacian(one, "neumann").values, 0.0, atol=1e-12)
    assert_allclose(laplacian(one, "periodic").values, 0.0, atol=1e-12)
    assert_allclose(laplacian(one, "dirichlet").values[[0, -1]], -1 / h**2)


def test_field_laplacian_order():
    errs = []
    for c in [17, 33]:
        grid = Grid([(0.0, 1.0), (0.0, 1.0)], (c, c))
        f = ScalarField.from_function(grid, lambda x, y: exp(x) + 0 * y)
        errs.append(abs(_inner(laplacian(f).values - exp(grid.mesh[0]))).max())
    assert_allclose(errs[0] / errs[1], 4.0, rtol=0.1)


def test_field_hessian():
    grid = Grid([(-1.0, 1.0), (-1.0, 1.0), (0.0, 1.0)], (9, 9, 8))
    f = ScalarField.from_function(grid, lambda x, y, z: x * y + z**2)
    H = hessian(f).values
    assert_allclose(H[0, 1], 1.0, atol=1e-10)
    assert_allclose(H[1, 0], H[0, 1])
    assert_allclose(H[2, 2], 2.0, atol=1e-9)
    assert_allclose(H[0, 2], 0.0, atol=1e-10)


def test_field_hessian_gradient_consistency():
    grid = Grid([(0.0, 1.0), (0.0, 1.0)], (41, 41))
    f = ScalarField.from_function(grid, lambda x, y: sin(2 * x) * cos(3 * y))
    H = hessian(f).values
    g = gradient(f)
    for i in range(2):
        gg = gradient(g.component(i)).values
        for j in range(2):
            assert abs(_inner(H[i, j] - gg[j])).max() < 50 * grid.hmax**2


def test_field_integration_by_parts():
    random = RandomState(0)
    grid = Grid([(0.0, 1.0), (0.0, 1.0)], (33, 33))
    f, g = random_bumps(grid, 2, random)
    w = grid.weights
    lhs = (w * f.values * laplacian(g).values).sum()
    rhs = (w * g.values * laplacian(f).values).sum()
    assert abs(lhs - rhs) <= 10 * grid.hmax**2


def test_field_staggered_energy_gradient():
    random = RandomState(3)
    grid = Grid([(0.0, 1.0), (0.0, 2.0)], (12, 20))
    u = ScalarField(grid, random.randn(*grid.shape))
    phi = random.randn(*grid.shape)

    t = 1e-3
    up = staggered_gradient_energy(u.evolve(u.values + t * phi))
    um = staggered_gradient_energy(u.evolve(u.values - t * phi))
    dE = (up - um) / (2 * t)
    expected = (grid.weights * -laplacian(u, "neumann").values * phi).sum()
    assert_allclose(dE, expected, rtol=1e-8)


def test_field_staggered_energy_additive():
    random = RandomState(1)
    grid = Grid([(0.0, 1.0), (0.0, 1.0)], (16, 16))
    u = ScalarField(grid, random.randn(*grid.shape))
    left = grid.mesh[0] < 0.4
    total = staggered_gradient_energy(u)
    split = staggered_gradient_energy(u, left) + staggered_gradient_energy(u, ~left)
    assert_allclose(split, total, rtol=1e-12)

    x = ScalarField.from_function(grid, lambda x, y: x)
    assert_allclose(staggered_gradient_energy(x), 0.5, rtol=1e-12)
