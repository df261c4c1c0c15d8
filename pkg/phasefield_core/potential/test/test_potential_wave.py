from numpy import arctanh, linspace, sqrt, tanh
from numpy.testing import assert_allclose

from phasefield_core.potential import QuarticWell, TabulatedWell, standing_wave


def test_potential_wave_quartic_closed_form():
    well = QuarticWell()
    t = linspace(-20, 20, 2001)
    assert_allclose(well.profile(t), tanh(t / sqrt(2)), atol=1e-8, rtol=0)

    for eps in [0.3, 0.05, 0.001]:
        assert_allclose(standing_wave(well, eps, 0.0), 0.0, atol=1e-12)

    x = 0.1 * sqrt(2) * arctanh(0.5)
    assert_allclose(standing_wave(well, 0.1, x), 0.5, atol=1e-8)


def test_potential_wave_tails():
    well = QuarticWell()
    eps = 0.05
    x = linspace(11 * eps, 100 * eps, 50)
    assert abs(1 - standing_wave(well, eps, x)).max() <= 1e-6
    assert abs(1 + standing_wave(well, eps, -x)).max() <= 1e-6
    assert standing_wave(well, eps, 1e4) <= 1.0
    assert standing_wave(well, eps, -1e4) >= -1.0


def test_potential_wave_equipartition():
    well = QuarticWell()
    wave = well.profile
    assert wave.equipartition_defect() <= 1e-8
    assert (wave.samples[1:] > wave.samples[:-1]).all()

    t = linspace(-8, 8, 101)
    assert_allclose(wave.derivative(t), sqrt(2 * well.value(wave(t))), atol=1e-8)


def test_potential_wave_inverse():
    wave = QuarticWell().profile
    for s in [-0.999, -0.5, 0.0, 0.3, 0.9, 1 - 1e-12]:
        assert_allclose(wave(wave.inverse(s)), s, atol=1e-10)
    assert_allclose(wave.inverse(0.9), sqrt(2) * arctanh(0.9), atol=1e-8)


def test_potential_wave_discrete_residual():
    well = QuarticWell()
    errs = []
    for n in [81, 161]:
        x = linspace(-1, 1, n)
        h = x[1] - x[0]
        eps = 0.1
        u = standing_wave(well, eps, x)
        lap = (u[2:] - 2 * u[1:-1] + u[:-2]) / h**2
        res = -eps * lap + well.derivative(u[1:-1]) / eps
        errs.append(abs(res).max())
    assert_allclose(errs[0] / errs[1], 4.0, rtol=0.1)


def test_potential_wave_tabulated():
    well = QuarticWell()
    nodes = linspace(-2.0, 2.0, 801)
    tab = TabulatedWell(nodes, well.value(nodes))
    t = linspace(-6, 6, 61)
    assert_allclose(tab.profile(t), tanh(t / sqrt(2)), atol=1e-5)
