import warnings

from tqdm import tqdm

from .._util import indefinite_solve


def newton_refine(s, cfg, verbose=False):
    """
    Newton refinement of a near-critical state.

    Each step solves the linearised equation

        (−εΔₕ + W″(u)/ε)δ = −R(u)

    and updates u ← u + δ, until sup|R| ≤ ``cfg.newton_tol``. The linear system is
    multiplied by the quadrature weights, which makes it the symmetric Hessian
    of the discrete energy. Conjugate gradients are used while the curvature
    stays positive; the minimal-residual method takes over otherwise.

    Returns
    -------
    PhaseState
        Refined state with ``converged=True`` and ``status="converged"``.
        If the residual grows on two consecutive steps the input state is
        returned with ``status="newton-diverged"``.
    """
    closure = s.closure
    eps = s.eps
    w = closure.weights.ravel()
    input_state = s
    history = [s.residual_norm]

    for _ in tqdm(range(cfg.newton_max_iters + 1), desc="Newton", disable=not verbose):
        if s.residual_norm <= cfg.newton_tol:
            return _flag(s, history, True, "converged")
        if len(history) > cfg.newton_max_iters:
            break

        u = closure.reduce(s.u.values)
        curv = (s.well.second_derivative(u) / eps).ravel()

        def matvec(x):
            x = x.ravel()
            return w * (-eps * closure.laplacian(x).ravel() + curv * x)

        b = -w * closure.reduce(s.residual.values).ravel()
        delta, _, _ = indefinite_solve(matvec, b, rtol=cfg.linear_tol)
        new = u + delta.reshape(u.shape)
        if not abs(new).max() <= s.c2:
            msg = "Newton step left the admissible range; keeping the input state."
            warnings.warn(msg, RuntimeWarning)
            return _flag(input_state, history, False, "newton-diverged")
        t = s.evolve(closure.extend(new))

        history.append(t.residual_norm)
        if len(history) >= 3 and history[-1] > history[-2] > history[-3]:
            warnings.warn("Newton iteration diverged; keeping the input state.", RuntimeWarning)
            return _flag(input_state, history, False, "newton-diverged")
        s = t

    msg = f"Newton did not reach residual {cfg.newton_tol} in {cfg.newton_max_iters} steps."
    warnings.warn(msg, RuntimeWarning)
    return _flag(s, history, False, "newton-unconverged")


def _flag(s, history, converged, status):
    t = s.evolve(s.u.values, converged, status)
    t.history = tuple(history)
    return t
