import sys
from argparse import ArgumentParser


def _parser():
    parser = ArgumentParser(
        prog="phasefield",
        description="Stable critical points of the Allen–Cahn energy and their diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("-c", "--config", default=None, help="experiment configuration (JSON)")
        p.add_argument(
            "--set",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override a configuration entry, e.g. solve.flow_tol=1e-4",
        )
        p.add_argument("-q", "--quiet", action="store_true", default=False)
        return p

    def with_field(p):
        p.add_argument("field", help="phase field file (ACVF)")
        p.add_argument(
            "--eps", type=float, default=None, help="ε of the field (default: smallest ε)"
        )

    p = command("solve", "relax the configured ansatz to a critical point")
    p.add_argument("--eps", type=float, default=None, help="ε to solve at (default: smallest ε)")
    p.add_argument("-o", "--output", default="state.acvf", help="output field file")

    p = command("certify", "smallest eigenvalue and stability of a field")
    with_field(p)
    p.add_argument("--slack", type=float, default=None)
    p.add_argument("-o", "--output", default=None, help="write the eigen report (JSON)")

    p = command("diagnose", "varifold diagnostics of a field")
    with_field(p)
    p.add_argument("-o", "--output", default=None, help="write the report (JSON)")

    p = command("slice", "level-set curves of a field in one 2-plane fiber")
    with_field(p)
    p.add_argument("--level", type=float, default=None)
    p.add_argument("--z", type=float, nargs="*", default=None, help="fiber coordinates")
    p.add_argument("-o", "--output", default=None, help="write the curves (CSV)")

    p = command("sweep", "run the ε sweep and summarise it")
    p.add_argument("-o", "--output", default=None, help="run directory")

    p = command("report", "summarise a run directory")
    p.add_argument("run_dir")

    return parser


def _config(args):
    from ._config import ExperimentConfig

    if args.config is None:
        cfg = ExperimentConfig()
    else:
        cfg = ExperimentConfig.from_json(args.config)
    if args.set:
        cfg = cfg.with_overrides(args.set)
    return cfg


def _eps(cfg, args):
    return cfg.eps[-1] if args.eps is None else args.eps


def _state(cfg, args):
    from ._sweep import load_state

    return load_state(args.field, _eps(cfg, args), cfg.make_well(), cfg.solve.boundary)


def _solve(cfg, args, verbose):
    from ..field import write_field
    from ._sweep import solve_state

    s = solve_state(cfg, _eps(cfg, args), verbose)
    write_field(args.output, s.u)
    print(s)
    return 0 if s.converged else 1


def _certify(cfg, args, verbose):
    from ..stability import certify_stable

    s = _state(cfg, args)
    stable = certify_stable(s, args.slack, verbose)
    if args.output is not None:
        with open(args.output, "w") as f:
            f.write(s.eigen_report.to_json() + "\n")
    print(f"lambda_min = {s.lambda_min:.8g}")
    print("stable" if stable else "unstable")
    return 0 if stable else 1


def _diagnose(cfg, args, verbose):
    from ..varifold import diagnose

    s = _state(cfg, args)
    d = cfg.diagnostics
    r = diagnose(s, d.points, d.radii, seed=cfg.seed, battery=d.battery, c1=d.c1)
    if args.output is None:
        print(r.to_json())
    else:
        with open(args.output, "w") as f:
            f.write(r.to_json() + "\n")
        print(r)
    return 0


def _slice(cfg, args, verbose):
    from ..slicing import extract_slice, regular_level, turning_angle, write_curves_csv

    s = _state(cfg, args)
    level = cfg.diagnostics.slice_level if args.level is None else args.level
    t = regular_level(s.u, level)
    z = None if args.z is None or len(args.z) == 0 else tuple(args.z)
    curves = extract_slice(s.u, t, z)
    if args.output is not None:
        write_curves_csv(curves, args.output)
    for c in curves:
        angle = turning_angle(c, s.eps) if len(c) >= 3 else 0.0
        print(
            f"level={c.level:.6g} closed={c.closed} vertices={len(c)} "
            f"length={c.length:.6g} turning={angle:.6f}"
        )
    return 0


def _sweep(cfg, args, verbose):
    from ._report import report, summary_text
    from ._sweep import run_sweep

    if args.output is not None:
        cfg = cfg.replace(output=args.output)
    root = run_sweep(cfg, verbose)
    summary = report(root)
    print(summary_text(summary), end="")
    return 0 if summary["passed"] else 1


def _report(args):
    from ._report import report, summary_text

    summary = report(args.run_dir)
    print(summary_text(summary), end="")
    return 0 if summary["passed"] else 1


_COMMANDS = {
    "solve": _solve,
    "certify": _certify,
    "diagnose": _diagnose,
    "slice": _slice,
    "sweep": _sweep,
}


def main(argv=None):
    """
    Entry point of the ``phasefield`` command.

    Returns
    -------
    int
        Exit status: 0 on success, 1 when the result fails its check (unstable
        field, unconverged solve, failed acceptance row), 2 on invalid input.
    """
    args = _parser().parse_args(argv)
    try:
        if args.command == "report":
            return _report(args)
        cfg = _config(args)
        return _COMMANDS[args.command](cfg, args, not args.quiet)
    except (ValueError, OSError) as e:
        print(f"phasefield: error: {e}", file=sys.stderr)
        return 2
