"""Command-line entry point: ``compactvrp {solve,check,oracle,plot,gen}``.

Exit codes: 0 success, 1 internal error, 2 parse/validation error,
3 infeasible instance, 4 time budget abort. Data files and stdout summaries are
byte-stable; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import formats
from .generate import PROFILES, GenConfig, generate
from .model import ValidationError
from .moo import InfeasibleInstance, SweepAborted, SweepReport, epsilon_sweep, payoff_table, weighted_sum_sweep
from .oracle import DEFAULT_GUARD, GuardExceeded, oracle_front
from .plot import render_svg
from .routes import enumerate_feasible_routes
from .solver import BudgetExceeded, check_solution

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


def _load(path: str):
    with open(path, "rb") as fh:
        return formats.load_instance(fh)


def _out_stem(args, instance_path: str, suffix: str) -> Path:
    if args.out:
        return Path(args.out)
    return Path(Path(instance_path).stem + "_" + suffix)


def _write_front(front, stem: Path, fmt: str | None) -> list[Path]:
    written = []
    for kind in ("json", "csv") if fmt is None else (fmt,):
        path = stem if stem.suffix == f".{kind}" and fmt else stem.with_name(stem.name + f".{kind}")
        path.write_bytes(formats.write_front(front, kind))
        written.append(path)
    return written


def _summary(report: SweepReport, table, instance) -> str:
    rows = [
        ("instance", instance.name),
        ("method", report.method),
        ("payoff f1-anchor", f"{table.f1_min_point[0]},{table.f1_min_point[1]}"),
        ("payoff f2-anchor", f"{table.f2_min_point[0]},{table.f2_min_point[1]}"),
        ("ranges r1,r2", f"{table.r1},{table.r2}"),
        ("grid points", str(report.grid_points_requested)),
        ("solver invocations", str(report.solver_invocations)),
        ("bypassed", str(report.bypassed)),
        ("refinement solves", str(report.refinement_invocations)),
        ("duplicates", str(report.duplicates_discarded)),
        ("points found", str(len(report.front))),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k:<{width}}  {v}" for k, v in rows]
    lines += [f"  {p.f1:>8} {p.f2:>8}" for p in report.front.points]
    return "\n".join(lines)


def cmd_solve(args) -> int:
    instance = _load(args.instance)
    start = time.monotonic()
    routes = enumerate_feasible_routes(instance)
    try:
        table = payoff_table(instance, routes, budget=args.budget)
        if args.method == "wsum":
            report = weighted_sum_sweep(instance, routes, table, args.points, budget=args.budget)
        else:
            report = epsilon_sweep(
                instance, routes, table, args.points, bypass=not args.no_bypass, refine=not args.no_refine,
                budget=args.budget,
            )
    except BudgetExceeded:
        print("warning: time budget exceeded while building the payoff table; no front written", file=sys.stderr)
        return EXIT_BUDGET
    except SweepAborted as exc:
        report = exc.report
        _write_front(report.front, _out_stem(args, args.instance, args.method), args.format)
        print(f"warning: time budget exceeded; partial front with {len(report.front)} points written", file=sys.stderr)
        return EXIT_BUDGET
    paths = _write_front(report.front, _out_stem(args, args.instance, args.method), args.format)
    print(_summary(report, table, instance))
    print("wrote " + ", ".join(str(p) for p in paths))
    print(f"wall time {time.monotonic() - start:.3f}s over {len(report.timings)} solves", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance = _load(args.instance)
    front = oracle_front(instance, args.guard)
    paths = _write_front(front, _out_stem(args, args.instance, "oracle"), args.format)
    print(f"oracle front for {instance.name}: {len(front)} points")
    print("wrote " + ", ".join(str(p) for p in paths))
    return EXIT_OK


def cmd_check(args) -> int:
    instance = _load(args.instance)
    with open(args.solution, "rb") as fh:
        solutions = formats.read_solutions(fh, instance)
    failed = False
    for k, sol in enumerate(solutions):
        violations = check_solution(instance, sol)
        tag = f"solution {k} (f1={sol.f1}, f2={sol.f2})"
        if violations:
            failed = True
            print(f"{tag}: FAIL")
            for v in violations:
                print(f"  {v}")
        else:
            print(f"{tag}: pass")
    return EXIT_INVALID if failed else EXIT_OK


def cmd_plot(args) -> int:
    fronts = []
    for path in [args.front] + ([args.overlay] if args.overlay else []):
        with open(path, "rb") as fh:
            fronts.append(formats.read_front(fh))
    if not any(len(f) for f in fronts):
        print("warning: empty front, writing an empty plot", file=sys.stderr)
    title = fronts[0].instance
    out = Path(args.out) if args.out else Path(Path(args.front).stem + ".svg")
    out.write_bytes(render_svg(fronts, title))
    print(f"wrote {out}")
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(
        n=args.n,
        seed=args.seed,
        profile=args.profile,
        fleet_size=args.fleet,
        capacity_factor=args.capacity_factor,
        time_factor=args.time_factor,
        time_limit=args.time_limit,
        asymmetry=args.asymmetry,
    )
    data = formats.dump_instance(generate(cfg))
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="compactvrp", description="Exact bi-objective VRP: travel time vs route compactness.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a front with a multi-objective method")
    s.add_argument("instance")
    s.add_argument("--method", choices=("wsum", "econ"), default="econ")
    s.add_argument("--points", type=int, default=10, help="grid size q (default 10)")
    s.add_argument("--budget", type=float, default=1200.0, help="seconds per solve (default 1200)")
    s.add_argument("--no-bypass", action="store_true", help="solve every epsilon grid point")
    s.add_argument("--no-refine", action="store_true", help="plain epsilon grid, no gap probing")
    s.add_argument("--out", help="output path stem (default <instance>_<method>)")
    s.add_argument("--format", choices=("json", "csv"), help="write only this format")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force front for small instances")
    o.add_argument("instance")
    o.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="maximum customers")
    o.add_argument("--out")
    o.add_argument("--format", choices=("json", "csv"))
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("check", help="verify a solution or every point of a front file")
    c.add_argument("instance")
    c.add_argument("solution")
    c.set_defaults(func=cmd_check)

    pl = sub.add_parser("plot", help="SVG scatter of a front-json file")
    pl.add_argument("front")
    pl.add_argument("--overlay", help="second front drawn on the same axes")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_plot)

    g = sub.add_parser("gen", help="generate a seeded synthetic instance")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--profile", choices=PROFILES, default="clustered")
    g.add_argument("--fleet", type=int, help="fleet size (default n)")
    g.add_argument("--capacity-factor", type=float, default=3.0, help="capacity / mean demand")
    g.add_argument("--time-factor", type=float, default=2.5, help="time limit / longest singleton route")
    g.add_argument("--time-limit", type=int, help="explicit time limit, overrides --time-factor")
    g.add_argument("--asymmetry", type=float, default=0.0, help="max relative travel-time asymmetry")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.ParseError, ValidationError, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InfeasibleInstance as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
