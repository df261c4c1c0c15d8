import pytest
from numpy import arctanh, sqrt
from numpy.testing import assert_allclose

from phasefield_core.example import standing_wave_state
from phasefield_core.field import Box, Grid
from phasefield_core.harness import AnsatzSpec, generate, skeleton
from phasefield_core.slicing import hausdorff_distance, level_band


def test_slicing_hausdorff_distance():
    A = [[0.0, 0.0], [1.0, 0.0]]
    B = [[0.0, 0.5]]
    assert_allclose(hausdorff_distance(A, B), sqrt(1.25))
    assert hausdorff_distance(A, B) == hausdorff_distance(B, A)
    assert hausdorff_distance(A, A) == 0
    assert_allclose(hausdorff_distance([0.0, 1.0, 2.0], [0.0, 2.0]), 1.0)

    with pytest.raises(ValueError):
        hausdorff_distance([], B)
    with pytest.raises(ValueError):
        hausdorff_distance(A, [[0.0, 0.0, 0.0]])


def test_slicing_level_band_1d():
    eps = 0.05
    s = standing_wave_state(eps, ratio=10)
    band = level_band(s.u, 0.9)
    h = s.grid.hmax
    assert_allclose(hausdorff_distance(band, [[0.0]]), eps * sqrt(2) * arctanh(0.9), atol=h)


def test_slicing_level_band_flat():
    eps = 0.025
    grid = Grid.from_spacing([(-0.5, 0.5)] * 2, eps / 10)
    spec = AnsatzSpec("flat_interface")
    u = generate(spec, grid, eps)
    band = level_band(u, 0.9)
    ref = skeleton(spec, grid, eps)
    bound = eps * sqrt(2) * arctanh(0.9) + 2 * grid.hmax
    assert hausdorff_distance(band, ref) <= bound

    region = Box([-0.1, -0.1], [0.1, 0.1])
    assert (abs(level_band(u, 0.5, region)) <= 0.1 + 1e-12).all()
