import pytest
from numpy import sqrt, tanh
from numpy.testing import assert_allclose

from phasefield_core.field import Grid, ScalarField, blowup, read_field, write_field
from phasefield_core.potential import QuarticWell, standing_wave


def test_field_blowup_identity():
    grid = Grid([(-1.0, 1.0), (0.0, 1.0)], (21, 11))
    f = ScalarField.from_function(grid, lambda x, y: x**2 * y + tanh(3 * x))
    g, eps = blowup(f, 0.1, [0.0, 0.0], 1.0, grid)
    assert_allclose(g.values, f.values, atol=1e-10)
    assert eps == 0.1


def test_field_blowup_standing_wave():
    well = QuarticWell()
    eps = 0.05
    source = Grid([(-1.0, 1.0)], (int(2 / (eps / 20)) + 1,))
    u = ScalarField(source, standing_wave(well, eps, source.axes[0]))

    target = Grid([(-0.4, 0.4)], (161,))
    v, eps_t = blowup(u, eps, [0.0], 2.0, target)
    assert_allclose(eps_t, eps / 2)
    assert_allclose(v.values, standing_wave(well, eps / 2, target.axes[0]), atol=1e-6)
    assert_allclose(v.values, tanh(target.axes[0] / (sqrt(2) * eps / 2)), atol=1e-6)


def test_field_blowup_constant_and_composition():
    grid = Grid([(-1.0, 1.0), (-1.0, 1.0)], (41, 41))
    c = ScalarField.constant(grid, -0.7)
    v, _ = blowup(c, 0.1, [0.1, -0.2], 0.5, Grid([(-1.0, 1.0)] * 2, (9, 9)))
    assert_allclose(v.values, -0.7, atol=1e-12)

    f = ScalarField.from_function(grid, lambda x, y: x**3 - x * y)
    target = Grid([(-0.5, 0.5)] * 2, (11, 11))
    mid = Grid([(-0.5, 0.5)] * 2, (41, 41))
    a, _ = blowup(f, 0.1, [0.0, 0.0], 0.8, mid)
    a, _ = blowup(a, 0.1, [0.0, 0.0], 0.5, target)
    b, _ = blowup(f, 0.1, [0.0, 0.0], 0.4, target)
    assert_allclose(a.values, b.values, atol=1e-4)


def test_field_blowup_escapes():
    grid = Grid([(-1.0, 1.0)], (21,))
    f = ScalarField.constant(grid, 1.0)
    with pytest.raises(ValueError):
        blowup(f, 0.1, [0.5], 1.0, grid)


def test_field_acvf(tmp_path):
    grid = Grid([(-1.0, 1.0), (0.0, 3.0), (2.0, 2.5)], (8, 9, 10))
    f = ScalarField.from_function(grid, lambda x, y, z: x + y * z)
    filepath = tmp_path / "u.acvf"
    write_field(filepath, f)

    data = filepath.read_bytes()
    assert data[:4] == b"ACVF"
    assert data[4:6] == b"\x01\x00"
    assert data[6] == 3
    assert len(data) == 7 + 3 * 4 + 3 * 16 + 8 * 8 * 9 * 10

    g = read_field(filepath)
    assert g.grid == grid
    assert_allclose(g.values, f.values, rtol=0, atol=0)

    filepath.write_bytes(b"XXXX" + data[4:])
    with pytest.raises(ValueError):
        read_field(filepath)
