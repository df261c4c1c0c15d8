import pytest
from numpy import clip, pi
from numpy.random import RandomState
from numpy.testing import assert_allclose

from phasefield_core.example import constant_state, flat_interface_state
from phasefield_core.field import Grid, ScalarField, bump, random_bumps
from phasefield_core.potential import QuarticWell
from phasefield_core.solver import PhaseState, SolveConfig, gradient_flow, newton_refine
from phasefield_core.stability import (
    EigenReport,
    certify_stable,
    check_B_stability,
    default_slack,
    min_eigenvalue,
    quadratic_form,
)


def _relaxed_wave(eps=0.05):
    grid = Grid.from_spacing([(-1.0, 1.0)], eps / 10)
    x = grid.axes[0]
    s = PhaseState(ScalarField(grid, clip(x / eps, -1, 1)), eps, QuarticWell())
    cfg = SolveConfig()
    return newton_refine(gradient_flow(s, cfg), cfg)


def _norm2(phi):
    return float((phi.grid.weights * phi.values**2).sum())


def test_stability_quadratic_form_bulk():
    s = constant_state(1.0, n=2, eps=0.1)
    phi = bump(s.grid, [0.5, 0.5], 0.3)
    q = quadratic_form(s, phi)
    assert q > (2 / 0.1) * _norm2(phi)
    assert quadratic_form(s, ScalarField.constant(s.grid, 0.0)) == 0.0


def test_stability_quadratic_form_saddle():
    s = constant_state(0.0, n=2, eps=0.02, count=65)
    phi = bump(s.grid, [0.5, 0.5], 0.45)
    assert quadratic_form(s, phi) < 0


def test_stability_quadratic_form_homogeneous():
    s = constant_state(0.3, n=1, eps=0.1)
    phi = bump(s.grid, [0.4], 0.2)
    scaled = ScalarField(s.grid, 3 * phi.values)
    assert_allclose(quadratic_form(s, scaled), 9 * quadratic_form(s, phi), rtol=1e-12)


def test_stability_quadratic_form_boundary():
    s = constant_state(1.0, n=2)
    with pytest.raises(ValueError):
        quadratic_form(s, ScalarField.constant(s.grid, 1.0))


def test_stability_min_eigenvalue_bulk():
    eps = 0.1
    report = min_eigenvalue(constant_state(1.0, n=2, eps=eps, count=129))
    assert report.converged
    assert_allclose(report.lambda_min, 2 / eps + eps * 2 * pi**2, rtol=1e-2)
    assert report.residual <= 1e-6 * abs(report.lambda_min) + 1e-10
    assert_allclose(_norm2(report.eigenfield), 1.0, rtol=1e-10)
    assert report.eigenfield.values.sum() > 0


def test_stability_min_eigenvalue_saddle():
    eps = 0.1
    report = min_eigenvalue(constant_state(0.0, n=2, eps=eps, count=129))
    assert report.converged
    assert_allclose(report.lambda_min, -1 / eps + eps * 2 * pi**2, rtol=1e-2)


def test_stability_rayleigh_consistency():
    s = constant_state(0.0, n=2, eps=0.1)
    report = min_eigenvalue(s)
    psi = report.eigenfield
    assert_allclose(quadratic_form(s, psi) / _norm2(psi), report.lambda_min, rtol=1e-4)

    lam = report.lambda_min
    for phi in random_bumps(s.grid, 20, RandomState(0)):
        n2 = _norm2(phi)
        assert quadratic_form(s, phi) >= lam * n2 - 1e-8 * (abs(lam) + 1) * n2


def test_stability_certify_standing_wave():
    s = _relaxed_wave()
    assert s.converged
    assert certify_stable(s)
    assert s.certified_stable is True
    assert abs(s.lambda_min) <= 1e-3
    assert s.eigen_report.converged
    assert default_slack(s) == pytest.approx(1e-3 * 2 / 0.05)


def test_stability_certify_unconverged():
    s = constant_state(1.0, n=1, eps=0.1)
    s.converged = False
    with pytest.warns(UserWarning):
        assert certify_stable(s)


def test_stability_certify_scaled_well():
    eps = 0.1
    s = constant_state(1.0, n=1, eps=eps, count=65)
    t = PhaseState(s.u, eps, QuarticWell().scaled(4.0))
    certify_stable(s)
    certify_stable(t)
    assert_allclose(t.lambda_min - s.lambda_min, 3 * 2 / eps, rtol=1e-6)


def test_stability_B_inequality():
    s = _relaxed_wave()
    lhs, rhs = check_B_stability(s, bump(s.grid, [0.0], 0.5))
    assert lhs <= 1e-6 * rhs

    zero = ScalarField.constant(s.grid, 0.0)
    assert check_B_stability(s, zero) == (0.0, 0.0)

    s = flat_interface_state(eps=0.05, n=2, half_width=0.5)
    lhs, rhs = check_B_stability(s, bump(s.grid, [0.0, 0.0], 0.4))
    assert s.certified_stable
    assert lhs <= 10 * s.grid.hmax**2
    assert lhs <= rhs


def test_stability_B_inequality_unstable():
    s = constant_state(0.0, n=2, eps=0.1)
    with pytest.raises(ValueError):
        check_B_stability(s, bump(s.grid, [0.5, 0.5], 0.3))


def test_stability_eigen_report_json():
    report = min_eigenvalue(constant_state(1.0, n=1, eps=0.1))
    again = EigenReport.from_json(report.to_json())
    assert again.to_dict() == report.to_dict()
    assert again.eigenfield is None
    assert str(report).startswith("EigenReport(iterations=")
