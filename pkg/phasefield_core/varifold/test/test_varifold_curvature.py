import pytest
from numpy import abs as npabs
from numpy import eye, outer, rot90, sqrt
from numpy.linalg import norm
from numpy.random import RandomState
from numpy.testing import assert_allclose

from phasefield_core.example import flat_interface_state, standing_wave_state
from phasefield_core.field import Box, Grid, ScalarField, hessian
from phasefield_core.potential import QuarticWell, standing_wave
from phasefield_core.solver import PhaseState, SolveConfig, gradient_flow, newton_refine
from phasefield_core.varifold import DiffuseVarifold, matrix_inequality_check


def _radial_state(box, center, R, eps, ratio):
    well = QuarticWell()
    grid = Grid.from_spacing(box, eps / ratio)
    r = sqrt(sum((m - c) ** 2 for m, c in zip(grid.mesh, center)))
    u = ScalarField(grid, standing_wave(well, eps, r - R))
    return PhaseState(u, eps, well), r


def _interface_nodes(s, margin=3):
    mask = npabs(s.u.values) <= 0.9
    inner = mask.copy()
    inner[...] = False
    inner[tuple(slice(margin, c - margin) for c in s.grid.shape)] = True
    return mask & inner


def test_varifold_B_flat():
    v = DiffuseVarifold(flat_interface_state(eps=0.05, n=2))
    B = v.B_field().values
    assert (B >= 0).all()
    assert B.max() < 1e-4

    v = DiffuseVarifold(standing_wave_state())
    assert v.B_field().values.max() < 1e-4


def test_varifold_B_circle():
    s, r = _radial_state([(-0.05, 0.55)] * 2, [0.0, 0.0], 0.25, 0.025, 16)
    B = DiffuseVarifold(s).B_field().values
    mask = _interface_nodes(s)
    assert mask.sum() > 100
    assert_allclose(B[mask] * r[mask], 1.0, rtol=2e-2)


def test_varifold_B_sphere():
    box = [(0.1, 0.5), (-0.1, 0.1), (-0.1, 0.1)]
    s, r = _radial_state(box, [0.0, 0.0, 0.0], 0.3, 0.04, 12)
    B = DiffuseVarifold(s).B_field().values
    mask = _interface_nodes(s)
    assert mask.sum() > 100
    assert_allclose(B[mask] * r[mask], sqrt(2), rtol=2e-2)


def test_varifold_B_rotation():
    s, _ = _radial_state([(-0.6, 0.6)] * 2, [0.1, 0.05], 0.3, 0.05, 10)
    B = DiffuseVarifold(s).B_field().values
    t = PhaseState(ScalarField(s.grid, rot90(s.u.values)), s.eps, s.well)
    Bt = DiffuseVarifold(t).B_field().values
    inner = (slice(1, -1), slice(1, -1))
    assert (Bt[inner] == rot90(B)[inner]).all()

    nu = DiffuseVarifold(s).nu_field().values
    nut = DiffuseVarifold(t).nu_field().values
    assert_allclose(nut, rot90(nu), rtol=1e-8, atol=1e-10 * nu.max())


def test_varifold_hessian_rotation():
    s, _ = _radial_state([(-0.6, 0.6)] * 2, [0.1, 0.05], 0.3, 0.05, 10)
    H = hessian(s.u).values
    Ht = hessian(ScalarField(s.grid, rot90(s.u.values))).values
    inner = (slice(1, -1), slice(1, -1))
    assert (Ht[0, 0][inner] == rot90(H[1, 1])[inner]).all()
    assert (Ht[0, 1][inner] == -rot90(H[0, 1])[inner]).all()


def _relaxed_flat(eps, ratio, n):
    well = QuarticWell()
    box = [(-1.0, 1.0)] if n == 1 else [(-0.1, 0.1), (-0.6, 0.6)]
    grid = Grid.from_spacing(box, eps / ratio)
    u = ScalarField(grid, standing_wave(well, eps, grid.mesh[-1]))
    cfg = SolveConfig()
    s = newton_refine(gradient_flow(PhaseState(u, eps, well), cfg), cfg)
    assert s.converged
    return s


def test_varifold_gradient_bound_1d():
    coarse = DiffuseVarifold(_relaxed_flat(0.05, 10, 1)).gradient_bound_check()
    fine = DiffuseVarifold(_relaxed_flat(0.05, 20, 1)).gradient_bound_check()
    assert coarse <= 1e-3
    assert fine <= coarse / 3


def test_varifold_gradient_bound_flat_2d():
    coarse = []
    for eps in [0.1, 0.05]:
        vc = DiffuseVarifold(_relaxed_flat(eps, 10, 2)).gradient_bound_check()
        vf = DiffuseVarifold(_relaxed_flat(eps, 20, 2)).gradient_bound_check()
        assert vc <= 1e-3
        assert vf <= vc / 3
        coarse.append(vc)
    assert_allclose(coarse[0], coarse[1], rtol=0.1)


def test_varifold_discrepancy_fixed_ratio():
    window = Box([-1.0, -0.4], [1.0, 0.4])
    _, a = DiffuseVarifold(_relaxed_flat(0.05, 10, 2)).discrepancy(window)
    _, b = DiffuseVarifold(_relaxed_flat(0.025, 10, 2)).discrepancy(window)
    assert a > 1e-5
    assert_allclose(a, b, rtol=1e-2)


def test_varifold_matrix_identity():
    for n in [2, 3]:
        m = [1.0] + [0.0] * (n - 1)
        lhs, rhs = matrix_inequality_check(eye(n), m)
        assert_allclose(lhs, n - 1)
        assert_allclose(rhs, n - 1)


def test_varifold_matrix_projection():
    m = [0.6, 0.0, 0.8]
    lhs, _ = matrix_inequality_check(outer(m, m), m)
    assert_allclose(lhs, 0.0, atol=1e-15)


def test_varifold_matrix_random():
    random = RandomState(0)
    for _ in range(10_000):
        A = random.normal(size=(3, 3))
        M = (A + A.T) / 2
        m = random.normal(size=3)
        m /= norm(m)
        lhs, rhs = matrix_inequality_check(M, m)
        assert lhs <= rhs + 1e-10 * (1 + norm(M))


def test_varifold_matrix_invalid():
    with pytest.raises(ValueError):
        matrix_inequality_check([[1.0, 2.0], [0.0, 1.0]], [1.0, 0.0])
    with pytest.raises(ValueError):
        matrix_inequality_check(eye(2), [1.0, 1.0])
    with pytest.raises(ValueError):
        matrix_inequality_check(eye(3), [1.0, 0.0])
