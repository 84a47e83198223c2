"""Compare the epsilon-constraint sweep against the weighted sum on a set of instances.

    python3 scripts/run_experiment.py [--points 10] [--seeds 1-20] [--plots DIR]

For each instance: front sizes for both methods and the oracle, how many
oracle points are non-supported, how many of those each method recovered,
solver invocations and wall time. Prints one row per instance plus totals.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from compactvrp import formats
from compactvrp.generate import GenConfig, generate
from compactvrp.model import ParetoFront
from compactvrp.moo import epsilon_sweep, payoff_table, supported, weighted_sum_sweep
from compactvrp.oracle import oracle_front
from compactvrp.plot import render_svg
from compactvrp.routes import enumerate_feasible_routes

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
PROFILES = ("clustered", "ring", "uniform")


def seed_range(text: str) -> range:
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def instances(seeds: range):
    for name in ("fixture7", "fixture9"):
        with open(FIXTURES / f"{name}.json", "rb") as fh:
            yield formats.load_instance(fh)
    for s in seeds:
        yield generate(GenConfig(n=5 + s % 5, seed=s, profile=PROFILES[s % 3]))


def run(inst, q: int):
    t0 = time.perf_counter()
    routes = enumerate_feasible_routes(inst)
    table = payoff_table(inst, routes)
    eps = epsilon_sweep(inst, routes, table, q=q)
    wsum = weighted_sum_sweep(inst, routes, table, q=q)
    elapsed = time.perf_counter() - t0
    truth = oracle_front(inst).vectors()
    nonsup = set(truth) - set(supported(truth))
    e, w = set(eps.front.vectors()), set(wsum.front.vectors())
    return {
        "name": inst.name,
        "n": inst.n_customers,
        "oracle": len(truth),
        "nonsup": len(nonsup),
        "eps": len(e),
        "eps_ns": len(nonsup & e),
        "wsum": len(w),
        "wsum_ns": len(nonsup & w),
        "eps_solves": eps.solver_invocations + eps.refinement_invocations,
        "bypassed": eps.bypassed,
        "wsum_solves": wsum.solver_invocations,
        "secs": elapsed,
        "fronts": (eps.front, wsum.front),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=10)
    ap.add_argument("--seeds", type=seed_range, default=seed_range("1-20"))
    ap.add_argument("--plots", type=Path, help="write an overlay SVG per instance here")
    args = ap.parse_args()

    cols = ("name", "n", "oracle", "nonsup", "eps", "eps_ns", "wsum", "wsum_ns", "eps_solves", "bypassed", "wsum_solves")
    print(" ".join(f"{c:>18}" if c == "name" else f"{c:>11}" for c in cols), f"{'secs':>7}")
    rows = []
    for inst in instances(args.seeds):
        r = run(inst, args.points)
        rows.append(r)
        print(" ".join(f"{r[c]:>18}" if c == "name" else f"{r[c]:>11}" for c in cols), f"{r['secs']:7.2f}")
        if args.plots:
            args.plots.mkdir(parents=True, exist_ok=True)
            e, w = r["fronts"]
            svg = render_svg([ParetoFront(e.points, inst.name, "econ"), ParetoFront(w.points, inst.name, "wsum")], inst.name)
            (args.plots / f"{inst.name}.svg").write_bytes(svg)

    total = lambda k: sum(r[k] for r in rows)
    print()
    print(f"instances                  {len(rows)}")
    print(f"oracle points              {total('oracle')}  ({total('nonsup')} non-supported)")
    print(f"econ recovered             {total('eps')}  ({total('eps_ns')} non-supported)")
    print(f"wsum recovered             {total('wsum')}  ({total('wsum_ns')} non-supported)")
    print(f"econ full front on         {sum(r['eps'] == r['oracle'] for r in rows)}/{len(rows)}")


if __name__ == "__main__":
    main()
