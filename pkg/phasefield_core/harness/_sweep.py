import csv
import json
import warnings
from pathlib import Path

from numpy import asarray

from ..field import read_field, write_field

B_STABILITY_TRIALS = 20
B_STABILITY_TOL = 0.05

DECAY_COLUMNS = (
    "eps",
    "h",
    "energy",
    "discrepancy_L1",
    "B_density",
    "first_variation_sup",
    "gradient_bound_violation",
    "lambda_min",
    "nu_density",
    "hausdorff",
)


def solve_state(cfg, eps, verbose=False, checkpoint_dir=None):
    """
    Generate the ansatz of ``cfg`` at ``eps`` and relax it to a critical point.

    Returns
    -------
    PhaseState
        State after the gradient flow and Newton refinement; its ``history``
        joins both residual histories.
    """
    from ..solver import PhaseState, gradient_flow, newton_refine
    from ._ansatz import generate

    well = cfg.make_well()
    grid = cfg.grid.build(eps, cfg.eps[0])
    u = generate(cfg.ansatz, grid, eps, well)
    s = PhaseState(u, eps, well, boundary=cfg.solve.boundary)
    s = gradient_flow(s, cfg.solve, verbose=verbose, checkpoint_dir=checkpoint_dir)
    flow = s.history
    if s.status != "flow-stalled":
        s = newton_refine(s, cfg.solve, verbose=verbose)
    s.flow_history = flow
    return s


def _stage(record, name, func):
    try:
        return func()
    except Exception as e:
        record["errors"].append(f"{name}: {e}")
        return None


def _solve_record(s):
    return {
        "converged": s.converged,
        "status": s.status,
        "residual_norm": s.residual_norm,
        "flow_iterations": len(getattr(s, "flow_history", ())) - 1,
        "newton_iterations": len(s.history) - 1,
        "energy": s.energy(),
    }


def _stability_record(s, seed):
    from ..stability import certify_stable, default_slack

    slack = default_slack(s)
    certified = certify_stable(s, slack)
    return {
        "certified": certified,
        "lambda_min": s.lambda_min,
        "slack": slack,
        "eigen": s.eigen_report.to_dict(),
        "B_stability": _B_stability_record(s, seed) if certified else None,
    }


def _B_stability_record(s, seed):
    from numpy.random import RandomState

    from ..field import random_bumps
    from ..stability import check_B_stability

    worst = 0.0
    failures = 0
    for phi in random_bumps(s.grid, B_STABILITY_TRIALS, RandomState(seed)):
        lhs, rhs = check_B_stability(s, phi)
        if lhs > (1 + B_STABILITY_TOL) * rhs:
            failures += 1
        if rhs > 0:
            worst = max(worst, lhs / rhs)
    return {
        "trials": B_STABILITY_TRIALS,
        "tolerance": B_STABILITY_TOL,
        "max_ratio": worst,
        "failures": failures,
    }


def _diagnostics_record(s, cfg, outdir):
    from ..varifold import DiffuseVarifold, diagnose

    d = cfg.diagnostics
    report = diagnose(s, d.points, d.radii, seed=cfg.seed, battery=d.battery, c1=d.c1)
    report.monotonicity.to_csv(outdir / "monotonicity.csv")
    out = report.to_dict()

    grid = s.grid
    x0 = asarray(d.points[0], float) if d.points else (grid.low + grid.high) / 2
    r = 0.4 * float(min((x0 - grid.low).min(), (grid.high - x0).min()))
    out["nu_density"] = DiffuseVarifold(s).nu_density(x0, r)
    out["nu_radius"] = r
    return out


def _central_fiber(grid):
    from ..slicing import fiber_points

    zs = fiber_points(grid)
    return min(zs, key=lambda z: (sum(v**2 for v in z), z))


def _slicing_record(s, cfg, outdir):
    from ..slicing import (
        FiberParams,
        classify_fibers,
        curvature_integral,
        exceptional_fraction,
        extract_slice,
        regular_level,
        slice_curvature_check,
        turning_angle,
        write_classification_csv,
        write_curves_csv,
    )

    grid = s.grid
    d = cfg.diagnostics
    t = regular_level(s.u, d.slice_level)
    z = _central_fiber(grid)
    curves = extract_slice(s.u, t, z if grid.n > 2 else None)
    write_curves_csv(curves, outdir / "curves.csv")
    long_enough = [c for c in curves if len(c) >= 3]
    out = {
        "level": t,
        "fiber": list(z),
        "curves": len(curves),
        "closed": [c.closed for c in long_enough],
        "turning_angles": [turning_angle(c, s.eps) for c in long_enough],
        "curvature_integrals": [curvature_integral(c, s.eps) for c in long_enough],
    }
    if grid.n in (2, 3):
        lhs, rhs = slice_curvature_check(s.u, s.eps, t)
        out["slice_check"] = {"lhs": lhs, "rhs": rhs}

    if d.fiber_directions is not None:
        center = d.fiber_center
        if center is None:
            center = tuple((grid.low[:2] + grid.high[:2]) / 2)
        params = FiberParams(d.fiber_directions, s.well, center=center, radius=d.fiber_radius)
        classes = classify_fibers(s.u, s.eps, params)
        write_classification_csv(classes, outdir / "fibers.csv")
        out["exceptional_fraction"] = exceptional_fraction(classes, grid)
        out["fibers_in_D"] = sum(c.in_D for c in classes)
        out["fibers_in_Q"] = sum(c.in_Q for c in classes)
        out["crossings"] = [list(c.crossings) for c in classes]
    return out


def _hausdorff_record(s, cfg):
    from ..slicing import hausdorff_distance, level_band
    from ._ansatz import skeleton

    ref = skeleton(cfg.ansatz, s.grid, s.eps)
    if ref.shape[0] == 0:
        return None
    dist = {}
    bound = {}
    for level in cfg.diagnostics.levels:
        band = level_band(s.u, level)
        if band.shape[0] == 0:
            continue
        key = f"{level:g}"
        dist[key] = hausdorff_distance(band, ref)
        bound[key] = s.eps * s.well.profile.inverse(level) + 2 * s.grid.hmax
    return {"distance": dist, "bound": bound}


def run_entry(cfg, index, eps, outdir, verbose=False):
    """
    Run the pipeline of one ε and write its artifacts to ``outdir``.

    Returns
    -------
    dict
        Per-ε record, also written to ``outdir/report.json``.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    record = {"index": index, "eps": eps, "errors": [], "warnings": []}

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        checkpoints = outdir / "checkpoints"
        s = _stage(record, "solve", lambda: solve_state(cfg, eps, verbose, checkpoints))
        if s is not None:
            record["h"] = s.grid.hmax
            record["shape"] = list(s.grid.shape)
            record["solve"] = _solve_record(s)
            write_field(outdir / "state.acvf", s.u)
            d = cfg.diagnostics
            if d.certify:
                record["stability"] = _stage(
                    record, "certify", lambda: _stability_record(s, cfg.seed)
                )
            if d.diagnose:
                record["diagnostics"] = _stage(
                    record, "diagnose", lambda: _diagnostics_record(s, cfg, outdir)
                )
                record["hausdorff"] = _stage(record, "hausdorff", lambda: _hausdorff_record(s, cfg))
            if d.slicing and s.grid.n >= 2:
                record["slicing"] = _stage(
                    record, "slicing", lambda: _slicing_record(s, cfg, outdir)
                )

    seen = []
    for w in caught:
        msg = f"{w.category.__name__}: {w.message}"
        if msg not in seen:
            seen.append(msg)
    record["warnings"] = seen

    _write_json(outdir / "report.json", record)
    return record


def run_sweep(cfg, verbose=False):
    """
    Run every ε of an experiment and write the run directory.

    Finished entries, recognised by their ``report.json``, are skipped, so an
    interrupted sweep resumes where it stopped. Stage failures are recorded in
    the per-ε report and the sweep moves on.

    Layout::

        <output>/config.json
        <output>/eps_00/{report.json, state.acvf, monotonicity.csv, curves.csv, fibers.csv}
        <output>/decay.csv

    Returns
    -------
    pathlib.Path
        The run directory.
    """
    from tqdm import tqdm

    root = Path(cfg.output)
    root.mkdir(parents=True, exist_ok=True)
    _write_json(root / "config.json", cfg.to_dict())

    records = []
    for i, eps in enumerate(tqdm(cfg.eps, desc="Sweep", disable=not verbose)):
        outdir = root / f"eps_{i:02d}"
        done = outdir / "report.json"
        if done.exists():
            with open(done) as f:
                records.append(json.load(f))
            continue
        records.append(run_entry(cfg, i, eps, outdir, verbose))

    write_decay_table(records, root / "decay.csv")
    return root


def decay_row(record):
    diag = record.get("diagnostics") or {}
    stab = record.get("stability") or {}
    haus = (record.get("hausdorff") or {}).get("distance", {})
    values = {
        "eps": record["eps"],
        "h": record.get("h"),
        "energy": (record.get("solve") or {}).get("energy"),
        "discrepancy_L1": diag.get("discrepancy_L1"),
        "B_density": diag.get("B_density_integral"),
        "first_variation_sup": diag.get("first_variation_sup"),
        "gradient_bound_violation": diag.get("gradient_bound_violation"),
        "lambda_min": stab.get("lambda_min"),
        "nu_density": diag.get("nu_density"),
        "hausdorff": max(haus.values()) if haus else None,
    }
    return ["" if values[k] is None else repr(float(values[k])) for k in DECAY_COLUMNS]


def write_decay_table(records, filepath):
    """
    Write the per-ε decay table.
    """
    with open(filepath, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(DECAY_COLUMNS)
        for r in records:
            writer.writerow(decay_row(r))


def load_state(filepath, eps, well, boundary="neumann"):
    """
    PhaseState from an ACVF field file.
    """
    from ..solver import PhaseState

    return PhaseState(read_field(filepath), eps, well, boundary=boundary)


def _write_json(filepath, obj):
    with open(filepath, "w") as f:
        f.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
