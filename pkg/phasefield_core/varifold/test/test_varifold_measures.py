import pytest
from numpy import abs as npabs
from numpy import clip, exp, pi, sqrt, where, zeros
from numpy.random import RandomState
from numpy.testing import assert_allclose

from phasefield_core.example import (
    circle_state,
    constant_state,
    flat_interface_state,
    standing_wave_state,
)
from phasefield_core.field import Ball, Grid, ScalarField, VectorField, bump, integrate
from phasefield_core.field import random_vector_fields
from phasefield_core.potential import QuarticWell, standing_wave
from phasefield_core.solver import PhaseState, SolveConfig, gradient_flow, newton_refine
from phasefield_core.varifold import DiffuseVarifold, unit_ball_volume


def _radial_test_field(grid, R, width):
    x, y = grid.mesh
    r = sqrt(x**2 + y**2)
    rho2 = ((r - R) / width) ** 2
    inside = rho2 < 1
    phi = where(inside, exp(1 - 1 / (1 - where(inside, rho2, 0.0))), 0.0)
    safe = where(r > 0, r, 1.0)
    return VectorField(grid, [x / safe * phi, y / safe * phi])


def test_varifold_weight_constant():
    v = DiffuseVarifold(constant_state(0.3, n=2))
    assert_allclose(v.weight_density().values, 0.0, atol=1e-20)
    assert v.mass() == 0.0
    assert v.support.sum() == 0


def test_varifold_unit_mass_1d():
    s = standing_wave_state(eps=0.05, ratio=20)
    v = DiffuseVarifold(s)
    assert (v.weight_density().values >= 0).all()
    assert_allclose(v.mass(), 1.0, rtol=1e-3)
    assert v.mass() <= s.energy() / s.well.sigma


def test_varifold_flat_mass_2d():
    s = flat_interface_state(eps=0.05, n=2, half_width=0.5)
    v = DiffuseVarifold(s)
    assert_allclose(v.mass(), 1.0, rtol=1e-2)
    assert v.mass() <= s.energy() / s.well.sigma


def test_varifold_unit_ball_volume():
    assert_allclose(unit_ball_volume(0), 1.0)
    assert_allclose(unit_ball_volume(1), 2.0)
    assert_allclose(unit_ball_volume(2), pi)
    assert_allclose(unit_ball_volume(3), 4 * pi / 3)


def test_varifold_first_variation_zero_field():
    s = circle_state()
    v = DiffuseVarifold(s)
    g = VectorField(s.grid, zeros((2,) + s.grid.shape))
    assert v.first_variation(g) == 0.0


def test_varifold_first_variation_flat_normal():
    s = flat_interface_state(eps=0.05, n=2, half_width=0.5)
    grid = s.grid
    v = DiffuseVarifold(s)
    b = bump(grid, [0.0, 0.0], 0.3).values
    g = VectorField(grid, [zeros(grid.shape), b])
    assert abs(v.first_variation(g)) <= 10 * grid.hmax**2


def test_varifold_first_variation_flat_random():
    s = flat_interface_state(eps=0.05, n=2, half_width=0.5)
    v = DiffuseVarifold(s)
    for g in random_vector_fields(s.grid, 5, RandomState(3)):
        assert abs(v.first_variation(g)) <= 1e-10


def test_varifold_first_variation_linear():
    s = circle_state()
    v = DiffuseVarifold(s)
    g1, g2 = random_vector_fields(s.grid, 2, RandomState(0))
    g = VectorField(s.grid, g1.values + 2 * g2.values)
    expected = v.first_variation(g1) + 2 * v.first_variation(g2)
    assert_allclose(v.first_variation(g), expected, rtol=1e-10, atol=1e-12)


def test_varifold_first_variation_circle_curvature():
    values = []
    for R in [0.2, 0.3, 0.4]:
        s = circle_state(radius=R)
        v = DiffuseVarifold(s)
        fv = v.first_variation(_radial_test_field(s.grid, R, 0.1))
        assert fv > 0
        assert_allclose(fv / v.mass(), 1 / R, rtol=0.1)
        values.append(fv / v.mass())
    assert values[0] > values[1] > values[2]


def test_varifold_first_variation_boundary():
    s = circle_state()
    grid = s.grid
    with pytest.raises(ValueError):
        DiffuseVarifold(s).first_variation(VectorField(grid, zeros((2,) + grid.shape) + 1.0))


def test_varifold_discrepancy_constant():
    xi, L1 = DiffuseVarifold(constant_state(1.0, n=2)).discrepancy()
    assert_allclose(xi.values, 0.0)
    assert L1 == 0.0


def _relaxed_ramp(eps, ratio):
    well = QuarticWell()
    grid = Grid.from_spacing([(-1.0, 1.0)], eps / ratio)
    u = ScalarField(grid, clip(grid.axes[0] / eps, -1, 1))
    cfg = SolveConfig()
    s = newton_refine(gradient_flow(PhaseState(u, eps, well), cfg), cfg)
    assert s.converged
    return s


def test_varifold_discrepancy_relaxed_1d():
    _, fine = DiffuseVarifold(_relaxed_ramp(0.05, 30)).discrepancy()
    assert 0 <= fine <= 1e-4

    _, coarse = DiffuseVarifold(_relaxed_ramp(0.05, 10)).discrepancy()
    assert 1e-4 < coarse < 1e-3
    assert 6 < coarse / fine < 12


def test_varifold_discrepancy_sampled_wave():
    _, coarse = DiffuseVarifold(standing_wave_state(eps=0.05, ratio=10)).discrepancy()
    _, fine = DiffuseVarifold(standing_wave_state(eps=0.05, ratio=20)).discrepancy()
    assert 3.5 < coarse / fine < 4.5


def test_varifold_density_ratio():
    well = QuarticWell()
    eps = 0.02
    s = flat_interface_state(eps=eps, n=2, half_width=0.5)
    v = DiffuseVarifold(s)
    assert_allclose(v.density_ratio([0.0, 0.0], 0.3), 1.0, rtol=2e-2)

    grid = s.grid
    double = standing_wave(well, eps, npabs(grid.mesh[1]) - 0.05)
    v = DiffuseVarifold(PhaseState(ScalarField(grid, double), eps, well))
    assert_allclose(v.density_ratio([0.0, 0.0], 0.4), 2.0, rtol=3e-2)

    with pytest.raises(ValueError):
        v.density_ratio([0.3, 0.0], 0.4)


def test_varifold_str():
    v = DiffuseVarifold(standing_wave_state())
    assert str(v).startswith("DiffuseVarifold(eps=0.05, threshold=1e-12)")
    assert "sigma: 0.47140452" in str(v)


def test_varifold_nu_density():
    s = flat_interface_state(eps=0.05, n=2, half_width=0.5)
    v = DiffuseVarifold(s)
    h = s.grid.hmax
    assert v.nu_density([0.0, 0.0], 0.3) <= 10 * h**2 * 0.3

    s = circle_state(radius=0.25)
    v = DiffuseVarifold(s)
    small = v.nu_density([0.25, 0.0], 0.075)
    large = v.nu_density([0.25, 0.0], 0.15)
    assert small > 0
    assert_allclose(large / small, 4.0, rtol=0.1)

    inside = Ball([0.25, 0.0], 0.15)
    assert_allclose(large, integrate(v.nu_field(), inside) * 0.15)


def test_varifold_exceptional_points():
    v = DiffuseVarifold(circle_state(radius=0.25))
    assert v.exceptional_points(0.1, 1e6) == []
    found = v.exceptional_points(0.1, 1e-6, points=[[0.25, 0.0], [0.0, 0.0]])
    assert len(found) == 1
    assert_allclose(found[0][0], (0.25, 0.0))
    assert len(v.exceptional_points(0.1, 1e-6, max_points=20)) > 0


def test_varifold_grid_without_interface():
    grid = Grid([(0.0, 1.0)] * 2, (17, 17))
    s = PhaseState(ScalarField.constant(grid, -1.0), 0.1, QuarticWell())
    v = DiffuseVarifold(s)
    assert v.nu_mass() == 0.0
    assert v.gradient_bound_check() == 0.0
