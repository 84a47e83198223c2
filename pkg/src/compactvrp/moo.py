"""Bi-objective drivers: payoff table, weighted-sum sweep, augmented epsilon-constraint sweep."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .model import FrontPoint, Instance, ParetoFront, Solution
from .routes import FeasibleRoute
from .solver import BudgetExceeded, SolveOutcome, SubproblemSpec, solve


class InfeasibleInstance(RuntimeError):
    """No partition of the customers fits the fleet."""


class SweepAborted(RuntimeError):
    """A solve hit its budget; ``report`` holds the partial sweep."""

    def __init__(self, report: "SweepReport"):
        super().__init__("sweep aborted on time budget")
        self.report = report


@dataclass(frozen=True)
class PayoffTable:
    f1_min_point: tuple[int, int]
    f2_min_point: tuple[int, int]
    f1_anchor: Solution
    f2_anchor: Solution

    @property
    def r1(self) -> int:
        return self.f2_min_point[0] - self.f1_min_point[0]

    @property
    def r2(self) -> int:
        return self.f1_min_point[1] - self.f2_min_point[1]


@dataclass
class SweepReport:
    front: ParetoFront
    method: str
    grid_points_requested: int
    solver_invocations: int = 0
    bypassed: int = 0
    duplicates_discarded: int = 0
    refinement_invocations: int = 0
    timings: list[tuple[str, float]] = field(default_factory=list)
    # (grid label, f1, f2) for every solve in execution order; f1 None when infeasible
    trace: list[tuple[str, int | None, int | None]] = field(default_factory=list)

    @property
    def elapsed(self) -> float:
        return sum(t for _, t in self.timings)


def _lex_key(p: FrontPoint) -> tuple:
    return (p.f1, p.f2, len(p.solution.routes) if p.solution else 0, p.solution.witness_key() if p.solution else ())


def filter_nondominated(
    points: Iterable[FrontPoint | tuple], instance: str = "", method: str = ""
) -> ParetoFront:
    """Keep the points no other point weakly dominates; duplicates collapse to one witness.

    Accepts FrontPoints or bare (f1, f2[, solution]) tuples.
    """
    pts = [p if isinstance(p, FrontPoint) else FrontPoint(*p) for p in points]
    pts.sort(key=_lex_key)
    kept: list[FrontPoint] = []
    best_f2 = math.inf
    for p in pts:
        # sorted by f1 then f2: p survives iff its f2 beats every earlier point's
        if p.f2 < best_f2:
            kept.append(p)
            best_f2 = p.f2
    return ParetoFront(points=tuple(kept), instance=instance, method=method)


def _run(instance, routes, spec, budget) -> SolveOutcome:
    return solve(instance, routes, spec, budget=budget)


def payoff_table(
    instance: Instance, routes: Sequence[FeasibleRoute], budget: float | None = None
) -> PayoffTable:
    """Lexicographic anchors: (min f1, then f2) and (min f2, then f1)."""
    a = _run(instance, routes, SubproblemSpec.epsilon_constrained(None), budget)
    if not a.optimal:
        raise InfeasibleInstance(f"instance {instance.name!r} has no feasible solution within the fleet")
    b = _run(instance, routes, SubproblemSpec.weighted(0), budget)
    return PayoffTable(a.vector, b.vector, a.solution, b.solution)


def _collect(report: SweepReport, raw: list[FrontPoint], instance: Instance) -> None:
    distinct = {(p.f1, p.f2) for p in raw}
    report.duplicates_discarded = len(raw) - len(distinct)
    report.front = filter_nondominated(raw, instance.name, report.method)


def weighted_sum_sweep(
    instance: Instance,
    routes: Sequence[FeasibleRoute],
    table: PayoffTable,
    q: int = 10,
    budget: float | None = None,
) -> SweepReport:
    """Solve the normalised weighted sum for lambda = 0, 1/(q-1), ..., 1.

    A zero range is replaced by 1 so the corresponding term keeps its argmin.
    With both ranges zero the front is the single ideal point and one solve suffices.
    """
    if q < 2:
        raise ValueError("weighted sweep needs q >= 2")
    report = SweepReport(ParetoFront(), "wsum", q)
    r1, r2 = max(table.r1, 1), max(table.r2, 1)
    lambdas = [Fraction(i, q - 1) for i in range(q)]
    if table.r1 == 0 and table.r2 == 0:
        lambdas = [Fraction(1)]
    raw: list[FrontPoint] = []
    try:
        for lam in lambdas:
            spec = SubproblemSpec.weighted(lam, r1, r2)
            out = _run(instance, routes, spec, budget)
            report.solver_invocations += 1
            report.timings.append((f"lambda={lam}", out.stats.elapsed))
            report.trace.append((f"lambda={lam}", *out.vector))
            raw.append(FrontPoint(out.solution.f1, out.solution.f2, out.solution))
    except BudgetExceeded:
        _collect(report, raw, instance)
        raise SweepAborted(report)
    _collect(report, raw, instance)
    return report


def epsilon_grid(table: PayoffTable, q: int) -> list[Fraction]:
    """eps_i = f2_max - i * r2 / q for i = 0..q-1, exact rationals."""
    f2_max = table.f1_min_point[1]
    return [f2_max - Fraction(i * table.r2, q) for i in range(q)]


def epsilon_sweep(
    instance: Instance,
    routes: Sequence[FeasibleRoute],
    table: PayoffTable,
    q: int = 10,
    bypass: bool = True,
    refine: bool = True,
    budget: float | None = None,
) -> SweepReport:
    """Augmented epsilon-constraint sweep over a descending grid on f2.

    Each solve minimises f1 then f2 under f2 <= floor(eps). With ``bypass``, a
    result f2 = v makes every later grid level with floor(eps) >= v redundant:
    those are skipped and counted. With ``refine``, whenever a result leaves an
    integer gap above the next pending level (or above f2* after the last
    level), an extra solve at v - 1 probes it, so every non-dominated vector is
    recovered whatever q is. Refinement solves are counted separately and do
    not consume grid points.
    """
    if q < 2:
        raise ValueError("epsilon sweep needs q >= 2")
    report = SweepReport(ParetoFront(), "econ", q)
    raw: list[FrontPoint] = []
    grid = epsilon_grid(table, q)
    levels = [math.floor(e) for e in grid]
    f2_star = table.f2_min_point[1]
    last_v: int | None = None

    def probe(eps: int, label: str, refinement: bool) -> int | None:
        out = _run(instance, routes, SubproblemSpec.epsilon_constrained(eps), budget)
        if refinement:
            report.refinement_invocations += 1
        else:
            report.solver_invocations += 1
        report.timings.append((label, out.stats.elapsed))
        if not out.optimal:
            report.trace.append((label, None, None))
            return None
        report.trace.append((label, *out.vector))
        raw.append(FrontPoint(out.solution.f1, out.solution.f2, out.solution))
        return out.solution.f2

    try:
        for i, level in enumerate(levels):
            if bypass and last_v is not None and level >= last_v:
                report.bypassed += 1
            else:
                v = probe(level, f"eps={grid[i]}", refinement=False)
                if v is None:
                    # every lower level is infeasible too
                    report.bypassed += len(levels) - i - 1
                    break
                last_v = v
            if refine:
                floor_next = levels[i + 1] if i + 1 < len(levels) else f2_star - 1
                while last_v - 1 > floor_next and last_v - 1 >= f2_star:
                    v = probe(last_v - 1, f"refine eps={last_v - 1}", refinement=True)
                    if v is None:
                        break
                    last_v = v
    except BudgetExceeded:
        _collect(report, raw, instance)
        raise SweepAborted(report)
    _collect(report, raw, instance)
    return report


def lower_hull(vectors: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower-left convex hull of a non-dominated set (supported extreme points)."""
    pts = sorted(set(vectors))
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below the segment hull[-2] -> p
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def supported(vectors: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Points of a non-dominated set that lie on its lower convex hull (vertices or edges)."""
    hull = lower_hull(vectors)
    out = []
    for v in sorted(set(vectors)):
        on = v in hull
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            if x1 <= v[0] <= x2 and (x2 - x1) * (v[1] - y1) == (y2 - y1) * (v[0] - x1):
                on = True
        if on:
            out.append(v)
    return out
