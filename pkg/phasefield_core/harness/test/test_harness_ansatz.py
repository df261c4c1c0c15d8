import pytest
from numpy import abs as npabs
from numpy import argmin, sqrt
from numpy.testing import assert_allclose

from phasefield_core.field import Grid
from phasefield_core.harness import KINDS, AnsatzSpec, generate, skeleton
from phasefield_core.potential import QuarticWell, standing_wave
from phasefield_core.solver import PhaseState
from phasefield_core.varifold import DiffuseVarifold


def _grid(eps, n=2, half_width=0.5, ratio=10):
    return Grid.from_spacing([(-half_width, half_width)] * n, eps / ratio)


def test_harness_ansatz_flat_exact():
    eps = 0.05
    grid = _grid(eps)
    well = QuarticWell()
    u = generate(AnsatzSpec("flat_interface"), grid, eps, well)
    assert_allclose(u.values, standing_wave(well, eps, grid.mesh[1]))

    u = generate(AnsatzSpec("flat_interface", normal=(1.0, 0.0), offset=0.1), grid, eps)
    assert_allclose(u.values, standing_wave(well, eps, grid.mesh[0] - 0.1))


def test_harness_ansatz_range():
    eps = 0.05
    grid = _grid(eps)
    for kind in KINDS:
        if kind == "cylinder":
            continue
        u = generate(AnsatzSpec(kind), grid, eps)
        assert u.values.min() >= -1
        assert u.values.max() <= 1

    grid3 = _grid(0.1, n=3, ratio=8)
    u = generate(AnsatzSpec("cylinder", modulation=0.1), grid3, 0.1)
    assert u.values.min() >= -1
    assert u.values.max() <= 1


def test_harness_ansatz_far_field():
    eps = 0.02
    grid = _grid(eps)
    x, y = grid.mesh

    u = generate(AnsatzSpec("flat_interface"), grid, eps)
    far = npabs(y) >= 11 * eps
    assert_allclose(npabs(u.values[far]), 1, atol=1e-6)

    u = generate(AnsatzSpec("sphere_shell", radius=0.25), grid, eps)
    far = npabs(sqrt(x**2 + y**2) - 0.25) >= 11 * eps
    assert_allclose(npabs(u.values[far]), 1, atol=1e-6)

    u = generate(AnsatzSpec("double_layer", separation=0.4), grid, eps)
    far = npabs(npabs(y) - 0.2) >= 11 * eps
    assert_allclose(npabs(u.values[far]), 1, atol=1e-6)


def test_harness_ansatz_sphere_center():
    grid = _grid(0.04, half_width=1.0, ratio=8)
    u = generate(AnsatzSpec("sphere_shell", radius=0.5), grid, 0.04)
    i = argmin(npabs(grid.axes[0]))
    assert_allclose(u.values[i, i], -1, atol=1e-6)


def test_harness_ansatz_double_layer_mass():
    eps = 0.02
    grid = _grid(eps)
    well = QuarticWell()
    single = generate(AnsatzSpec("flat_interface"), grid, eps, well)
    double = generate(AnsatzSpec("double_layer"), grid, eps, well)
    m1 = DiffuseVarifold(PhaseState(single, eps, well)).mass()
    m2 = DiffuseVarifold(PhaseState(double, eps, well)).mass()
    assert_allclose(m2 / m1, 2, rtol=2e-2)

    i = argmin(npabs(grid.axes[0]))
    assert_allclose(double.values[i, i], standing_wave(well, eps, -10 * eps), rtol=1e-12)

    wide = generate(AnsatzSpec("double_layer", separation=24 * eps), grid, eps, well)
    assert_allclose(wide.values[i, i], -1, atol=1e-6)


def test_harness_ansatz_triple_junction_legs():
    eps = 0.025
    grid = _grid(eps)
    well = QuarticWell()
    u = generate(AnsatzSpec("triple_junction"), grid, eps, well)
    i = argmin(npabs(grid.axes[0] - 0.3))
    y = grid.axes[1]
    expected = standing_wave(well, eps, npabs(y) - 2 * eps)
    assert_allclose(u.values[i], expected, atol=0.05)


def test_harness_ansatz_errors():
    grid = _grid(0.05, ratio=4)
    with pytest.raises(ValueError):
        generate(AnsatzSpec("flat_interface"), grid, 0.05)
    with pytest.raises(ValueError):
        generate(AnsatzSpec("triple_junction"), _grid(0.05, n=1), 0.05)
    with pytest.raises(ValueError):
        AnsatzSpec("helix")
    with pytest.raises(ValueError):
        AnsatzSpec("cylinder", modulation=1.5)
    with pytest.raises(ValueError):
        AnsatzSpec("constant", value=2.0)
    with pytest.raises(ValueError):
        generate(AnsatzSpec("flat_interface", normal=(1.0, 0.0, 0.0)), _grid(0.05), 0.05)


def test_harness_ansatz_skeleton():
    eps = 0.05
    grid = _grid(eps)

    pts = skeleton(AnsatzSpec("flat_interface"), grid, eps)
    assert pts.shape[0] > 0
    assert_allclose(pts[:, 1], 0, atol=1e-12)

    pts = skeleton(AnsatzSpec("sphere_shell", radius=0.3), grid, eps)
    assert_allclose(sqrt((pts**2).sum(1)), 0.3)

    pts = skeleton(AnsatzSpec("double_layer", separation=0.4), grid, eps)
    assert_allclose(npabs(pts[:, 1]), 0.2)

    assert skeleton(AnsatzSpec("constant"), grid, eps).shape == (0, 2)

    pts = skeleton(AnsatzSpec("triple_junction"), grid, eps)
    assert pts.shape[1] == 2
    assert (pts >= grid.interior().low - 1e-12).all()


def test_harness_ansatz_dict():
    spec = AnsatzSpec("sphere_shell", center=(0.1, 0.2), radius=0.3)
    assert AnsatzSpec.from_dict(spec.to_dict()) == spec
