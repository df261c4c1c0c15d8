"""
Ready-made wells and phase states for examples and tests.
"""


def quartic_well():
    from phasefield_core.potential import QuarticWell

    return QuarticWell()


def constant_state(value=1.0, n=1, eps=0.1, count=33):
    """
    u ≡ value on the unit box [0, 1]ⁿ.
    """
    from phasefield_core.field import Grid, ScalarField
    from phasefield_core.solver import PhaseState

    grid = Grid([(0.0, 1.0)] * n, (count,) * n)
    return PhaseState(ScalarField.constant(grid, value), eps, quartic_well())


def standing_wave_state(eps=0.05, ratio=10, half_width=1.0):
    """
    Sampled standing wave u(x) = q₀(x/ε) on [−1, 1] with spacing ε/ratio.
    """
    from phasefield_core.field import Grid, ScalarField
    from phasefield_core.potential import standing_wave
    from phasefield_core.solver import PhaseState

    well = quartic_well()
    grid = Grid.from_spacing([(-half_width, half_width)], eps / ratio)
    u = ScalarField(grid, standing_wave(well, eps, grid.axes[0]))
    return PhaseState(u, eps, well)


def flat_interface_state(eps=0.05, n=2, ratio=10, half_width=0.5):
    """
    Flat interface u = q₀(x₂/ε) on [−half_width, half_width]ⁿ.
    """
    from phasefield_core.field import Grid, ScalarField
    from phasefield_core.potential import standing_wave
    from phasefield_core.solver import PhaseState

    well = quartic_well()
    grid = Grid.from_spacing([(-half_width, half_width)] * n, eps / ratio)
    u = ScalarField(grid, standing_wave(well, eps, grid.mesh[1]))
    return PhaseState(u, eps, well)


def circle_state(radius=0.25, eps=0.025, ratio=10, half_width=0.6):
    """
    Radial ansatz u = q₀((|x| − R)/ε) in 2D.
    """
    from numpy import sqrt

    from phasefield_core.field import Grid, ScalarField
    from phasefield_core.potential import standing_wave
    from phasefield_core.solver import PhaseState

    well = quartic_well()
    grid = Grid.from_spacing([(-half_width, half_width)] * 2, eps / ratio)
    x, y = grid.mesh
    u = ScalarField(grid, standing_wave(well, eps, sqrt(x**2 + y**2) - radius))
    return PhaseState(u, eps, well)
