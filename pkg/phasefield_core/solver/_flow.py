import warnings
from pathlib import Path

from numpy import clip

from ..field import write_field


def gradient_flow(s, cfg, verbose=False, callback=None, checkpoint_dir=None):
    """
    Semi-implicit gradient flow towards a critical point.

    Each step solves

        (I − τεΔₕ)uₖ₊₁ = uₖ − τW′(uₖ)/ε

    with the fast transform of the boundary closure and clamps the result to
    [−c₂, c₂]. A step that increases the energy is rejected and τ is halved.
    The flow stops once the residual sup-norm drops to ``cfg.flow_tol``.

    Parameters
    ----------
    s : PhaseState
        Initial state.
    cfg : SolveConfig
        Solve parameters.
    verbose : bool
        ``True`` to show a progress bar. Defaults to ``False``.
    callback : callable, optional
        Called as ``callback(iteration, state)`` after every accepted step.
    checkpoint_dir : path, optional
        Where to write ACVF checkpoints every ``cfg.checkpoint_every`` steps.

    Returns
    -------
    PhaseState
        Last accepted state. ``converged`` is ``False`` and ``status`` is
        ``"flow-unconverged"`` if the iteration budget ran out.
    """
    from tqdm import tqdm

    if s.boundary != cfg.boundary:
        s = _with_boundary(s, cfg.boundary)

    closure = s.closure
    eps = s.eps
    well = s.well
    tau = cfg.step(eps, well)
    E = s.energy()
    history = [s.residual_norm]

    if s.residual_norm <= cfg.flow_tol:
        return _finish(s, history, True, "flow-converged")

    pbar = tqdm(total=cfg.max_flow_iters, desc="Flow", disable=not verbose)
    for it in range(1, cfg.max_flow_iters + 1):
        u = closure.reduce(s.u.values)
        while True:
            rhs = u - tau * well.derivative(u) / eps
            new = clip(closure.solve_shifted(rhs, 1.0, tau * eps), -s.c2, s.c2)
            t = s.evolve(closure.extend(new))
            Et = t.energy()
            if Et <= E + 1e-13 * max(1.0, abs(E)):
                break
            tau /= 2
            if tau < 1e-14 * eps:
                pbar.close()
                warnings.warn("Flow step collapsed; energy does not decrease.", RuntimeWarning)
                return _finish(s, history, False, "flow-stalled")

        s, E = t, Et
        history.append(s.residual_norm)
        pbar.update(1)
        pbar.set_postfix(residual=f"{s.residual_norm:.2e}")

        if callback is not None:
            callback(it, s)
        if checkpoint_dir is not None and cfg.checkpoint_every > 0:
            if it % cfg.checkpoint_every == 0:
                Path(checkpoint_dir).mkdir(parents=True, exist_ok=True)
                write_field(Path(checkpoint_dir) / f"flow_{it:06d}.acvf", s.u)

        if s.residual_norm <= cfg.flow_tol:
            pbar.close()
            return _finish(s, history, True, "flow-converged")

    pbar.close()
    msg = f"Gradient flow did not reach residual {cfg.flow_tol} in {cfg.max_flow_iters} steps."
    warnings.warn(msg, RuntimeWarning)
    return _finish(s, history, False, "flow-unconverged")


def _with_boundary(s, boundary):
    from ._state import PhaseState

    return PhaseState(s.u, s.eps, s.well, boundary, s.c2)


def _finish(s, history, converged, status):
    t = s.evolve(s.u.values, converged, status)
    t.history = tuple(history)
    return t
