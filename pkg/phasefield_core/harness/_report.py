import json
from math import pi
from pathlib import Path

from ._sweep import _write_json

TABLE_COLUMNS = (
    ("eps", "eps"),
    ("h", "h"),
    ("status", "status"),
    ("lambda_min", "lambda_min"),
    ("energy", "energy"),
    ("discrepancy_L1", "discrepancy"),
    ("B_density", "B density"),
    ("first_variation_sup", "first var."),
    ("hausdorff", "Hausdorff"),
)

_DECAY_FLOOR = {"discrepancy_L1": 1e-12, "B_density": 1e-8, "nu_density": 1e-8}


def _load_records(root):
    if not root.is_dir():
        raise ValueError(f"Run directory {root} does not exist.")
    records = []
    for d in sorted(root.glob("eps_*")):
        path = d / "report.json"
        if path.exists():
            with open(path) as f:
                records.append(json.load(f))
    if len(records) == 0:
        raise ValueError(f"Run directory {root} contains no per-eps reports.")
    return sorted(records, key=lambda r: r["index"])


def _load_config(root):
    path = root / "config.json"
    if not path.exists():
        return None
    with open(path) as f:
        return json.load(f)


def _missing_artifacts(root, config, records):
    missing = []
    for name in ["config.json", "decay.csv"]:
        if not (root / name).exists():
            missing.append(name)

    diag = (config or {}).get("diagnostics", {})
    for r in records:
        d = root / f"eps_{r['index']:02d}"
        expected = ["state.acvf"]
        if diag.get("diagnose", True):
            expected.append("monotonicity.csv")
        if diag.get("slicing", True) and len(r.get("shape", ())) >= 2:
            expected.append("curves.csv")
            if diag.get("fiber_directions") is not None:
                expected.append("fibers.csv")
        for name in expected:
            if not (d / name).exists():
                missing.append(f"{d.name}/{name}")
    return missing


def _entry(r):
    diag = r.get("diagnostics") or {}
    stab = r.get("stability") or {}
    haus = (r.get("hausdorff") or {}).get("distance", {})
    return {
        "eps": r["eps"],
        "h": r.get("h"),
        "status": (r.get("solve") or {}).get("status", "failed"),
        "certified": stab.get("certified"),
        "lambda_min": stab.get("lambda_min"),
        "energy": (r.get("solve") or {}).get("energy"),
        "discrepancy_L1": diag.get("discrepancy_L1"),
        "B_density": diag.get("B_density_integral"),
        "first_variation_sup": diag.get("first_variation_sup"),
        "nu_density": diag.get("nu_density"),
        "hausdorff": max(haus.values()) if haus else None,
        "errors": len(r.get("errors", [])),
    }


def _stability_row(records):
    stabs = [r.get("stability") for r in records]
    if any(s is None for s in stabs):
        return "missing"
    if any(s["lambda_min"] < 0 and not s["certified"] for s in stabs):
        return "fail: λ_min < 0"
    return "pass"


def _B_stability_row(records):
    stabs = [r.get("stability") for r in records]
    if any(s is None for s in stabs):
        return "missing"
    checked = [(r, s.get("B_stability")) for r, s in zip(records, stabs) if s["certified"]]
    if not checked:
        return "n/a"
    for r, b in checked:
        if b is None:
            return "missing"
        if b["failures"] > 0:
            return f"fail: B inequality violated at eps={r['eps']:g}"
    return "pass"


def _convergence_row(records):
    solves = [r.get("solve") for r in records]
    if any(s is None for s in solves):
        return "missing"
    failed = [s["status"] for s in solves if not s["converged"]]
    if failed:
        return f"fail: {failed[0]}"
    return "pass"


def _decay_row(entries, key):
    values = [e[key] for e in entries]
    if any(v is None for v in values):
        return "missing"
    floor = _DECAY_FLOOR[key]
    for a, b in zip(values[:-1], values[1:]):
        if not (b < a or max(a, b) <= floor):
            return f"fail: {key} does not decrease"
    return "pass"


def _stationarity_row(entries):
    if any(e["first_variation_sup"] is None or e["h"] is None for e in entries):
        return "missing"
    for e in entries:
        if e["first_variation_sup"] > 10 * e["h"] ** 2:
            return f"fail: first variation above 10h² at eps={e['eps']:g}"
    return "pass"


def _hausdorff_row(records):
    hs = [r.get("hausdorff") for r in records]
    if all(h is None for h in hs):
        return "n/a"
    for r, h in zip(records, hs):
        if h is None:
            return "missing"
        for level, dist in h["distance"].items():
            if dist > h["bound"][level]:
                return f"fail: Hausdorff distance above bound at eps={r['eps']:g}"
    return "pass"


def _geometry_row(records, kind):
    slices = [r.get("slicing") for r in records]
    if kind not in ("triple_junction", "flat_interface"):
        return "n/a"
    if any(s is None for s in slices):
        return "missing"
    for r, s in zip(records, slices):
        if kind == "triple_junction":
            turns = [abs(a) for a in s["turning_angles"]]
            if not turns or max(turns) < pi / 3 * 0.9:
                return f"fail: turning angle below π/3 at eps={r['eps']:g}"
        elif any(k > 1e-8 for k in s["curvature_integrals"]):
            return f"fail: curved flat slice at eps={r['eps']:g}"
    return "pass"


def _acceptance(records, entries, kind):
    rows = {
        "stability": _stability_row(records),
        "B stability": _B_stability_row(records),
        "convergence": _convergence_row(records),
        "discrepancy decay": _decay_row(entries, "discrepancy_L1"),
        "B decay": _decay_row(entries, "B_density"),
        "nu decay": _decay_row(entries, "nu_density"),
        "stationarity": _stationarity_row(entries),
        "Hausdorff": _hausdorff_row(records),
        "slice geometry": _geometry_row(records, kind),
    }
    nerrors = sum(e["errors"] for e in entries)
    rows["stage errors"] = "pass" if nerrors == 0 else f"fail: {nerrors} stage errors"
    return rows


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.4g}"
    return str(v)


def summary_text(summary):
    header = [label for _, label in TABLE_COLUMNS]
    rows = [[_fmt(e[key]) for key, _ in TABLE_COLUMNS] for e in summary["entries"]]
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]

    def line(cells):
        return "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(header), line(["-" * w for w in widths])]
    out += [line(r) for r in rows]
    out.append("")
    width = max(len(k) for k in summary["acceptance"])
    for k, v in summary["acceptance"].items():
        out.append(f"{k.ljust(width)}  {v}")
    if summary["missing"]:
        out.append("")
        out.append("missing artifacts: " + ", ".join(summary["missing"]))
    return "\n".join(out) + "\n"


def report(run_dir):
    """
    Aggregate a run directory into ``summary.json`` and ``summary.txt``.

    Each acceptance row reads ``"pass"``, ``"n/a"``, ``"missing"`` or
    ``"fail: <reason>"``. Missing artifacts are listed rather than raised.

    Parameters
    ----------
    run_dir : str or Path
        Directory written by :func:`run_sweep`.

    Returns
    -------
    dict
        The summary written to ``summary.json``.
    """
    root = Path(run_dir)
    records = _load_records(root)
    config = _load_config(root)
    kind = ((config or {}).get("ansatz") or {}).get("kind")

    entries = [_entry(r) for r in records]
    acceptance = _acceptance(records, entries, kind)
    summary = {
        "ansatz": kind,
        "entries": entries,
        "acceptance": acceptance,
        "missing": _missing_artifacts(root, config, records),
        "passed": not any(v.startswith("fail") for v in acceptance.values()),
    }

    _write_json(root / "summary.json", summary)
    with open(root / "summary.txt", "w") as f:
        f.write(summary_text(summary))
    return summary
