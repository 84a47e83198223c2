"""Exact scalarized solver over the set-partitioning structure, plus a constraint checker.

The solver expands partitions canonically: from a set of unserved customers it
always assigns the lowest-indexed one, picking a feasible route that contains it
and only unserved customers. Each state keeps the Pareto-minimal labels
(routes_used, f1, f2) of its completions, so any bound on f2 or weighted
combination can be answered from the labels of the full state.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .model import Instance, Solution, build_route
from .routes import FeasibleRoute

WEIGHTED = "weighted"
EPSILON = "epsilon"


class BudgetExceeded(RuntimeError):
    """A single solve ran past its wall-clock budget."""


@dataclass(frozen=True)
class SubproblemSpec:
    """A scalarized subproblem.

    ``weighted`` minimises w1*f1/r1 + w2*f2/r2. ``epsilon`` minimises f1 then f2
    subject to f2 <= epsilon (``None`` means unbounded); that ordering is the
    small-augmentation limit of the augmented epsilon-constraint objective.
    """

    mode: str
    w1: Fraction = Fraction(0)
    w2: Fraction = Fraction(0)
    r1: int = 1
    r2: int = 1
    epsilon: int | None = None
    fleet_cap: int | None = None

    def __post_init__(self) -> None:
        if self.mode == WEIGHTED:
            if self.w1 < 0 or self.w2 < 0 or self.w1 + self.w2 != 1:
                raise ValueError("weights must be non-negative and sum to 1")
            if self.r1 < 1 or self.r2 < 1:
                raise ValueError("normalisation ranges must be at least 1")
        elif self.mode == EPSILON:
            if self.epsilon is not None and self.epsilon < 0:
                raise ValueError("epsilon must be non-negative")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.fleet_cap is not None and self.fleet_cap < 1:
            raise ValueError("fleet_cap must be at least 1")

    @classmethod
    def weighted(cls, w1, r1: int = 1, r2: int = 1, fleet_cap: int | None = None) -> "SubproblemSpec":
        w1 = Fraction(w1)
        return cls(WEIGHTED, w1=w1, w2=1 - w1, r1=r1, r2=r2, fleet_cap=fleet_cap)

    @classmethod
    def epsilon_constrained(cls, epsilon: int | None, fleet_cap: int | None = None) -> "SubproblemSpec":
        return cls(EPSILON, epsilon=epsilon, fleet_cap=fleet_cap)

    def sort_key(self, f1: int, f2: int, routes_used: int, witness) -> tuple:
        """Total order on candidate partitions; the minimum is the optimum.

        Weighted values are compared as w1*f1*r2 + w2*f2*r1 to avoid division.
        """
        if self.mode == WEIGHTED:
            return (self.w1 * f1 * self.r2 + self.w2 * f2 * self.r1, f1, f2, routes_used, witness)
        return (f1, f2, routes_used, witness)

    def admits(self, f2: int, routes_used: int, fleet_size: int) -> bool:
        cap = fleet_size if self.fleet_cap is None else self.fleet_cap
        if routes_used > cap:
            return False
        return self.mode != EPSILON or self.epsilon is None or f2 <= self.epsilon


@dataclass
class SolveStats:
    labels_explored: int = 0
    states: int = 0
    elapsed: float = 0.0


@dataclass
class SolveOutcome:
    status: str
    solution: Solution | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    @property
    def vector(self) -> tuple[int, int] | None:
        return None if self.solution is None else (self.solution.f1, self.solution.f2)


# label: (routes_used, f1, f2, witness) with witness a sorted tuple of route orders
Label = tuple[int, int, int, tuple[tuple[int, ...], ...]]


def _pareto(labels: list[Label]) -> list[Label]:
    labels.sort(key=lambda lb: (lb[1], lb[2], lb[0], lb[3]))
    kept: list[Label] = []
    for lb in labels:
        k, a, b, _ = lb
        if any(k2 <= k and a2 <= a and b2 <= b for k2, a2, b2, _ in kept):
            continue
        kept.append(lb)
    return kept


def _by_lowest(routes: Sequence[FeasibleRoute], n: int) -> list[list[FeasibleRoute]]:
    groups: list[list[FeasibleRoute]] = [[] for _ in range(n + 1)]
    for r in routes:
        low = (r.members & -r.members).bit_length()
        groups[low].append(r)
    return groups


def full_labels(
    instance: Instance,
    routes: Sequence[FeasibleRoute],
    fleet_cap: int,
    deadline: float | None = None,
    stats: SolveStats | None = None,
) -> list[Label]:
    """Pareto-minimal (routes_used, f1, f2, witness) labels covering every customer."""
    n = instance.n_customers
    groups = _by_lowest(routes, n)
    memo: dict[int, list[Label]] = {0: [(0, 0, 0, ())]}
    stats = stats if stats is not None else SolveStats()

    def labels_of(remaining: int) -> list[Label]:
        hit = memo.get(remaining)
        if hit is not None:
            return hit
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("solve exceeded its time budget")
        low = (remaining & -remaining).bit_length()
        cand: list[Label] = []
        for r in groups[low]:
            if r.members & ~remaining:
                continue
            for k, a, b, w in labels_of(remaining & ~r.members):
                if k + 1 > fleet_cap:
                    continue
                cand.append((k + 1, a + r.best_travel_time, b + r.compactness, tuple(sorted(w + (r.best_order,)))))
        stats.labels_explored += len(cand)
        stats.states += 1
        out = _pareto(cand)
        memo[remaining] = out
        return out

    return labels_of((1 << n) - 1)


def count_partitions(instance: Instance, routes: Sequence[FeasibleRoute], fleet_cap: int | None = None) -> int:
    """Number of distinct partitions into feasible routes reached by the canonical expansion."""
    n = instance.n_customers
    cap = instance.fleet_size if fleet_cap is None else fleet_cap
    groups = _by_lowest(routes, n)
    memo: dict[tuple[int, int], int] = {}

    def count(remaining: int, budget: int) -> int:
        if remaining == 0:
            return 1
        if budget == 0:
            return 0
        key = (remaining, budget)
        if key not in memo:
            low = (remaining & -remaining).bit_length()
            memo[key] = sum(
                count(remaining & ~r.members, budget - 1) for r in groups[low] if not r.members & ~remaining
            )
        return memo[key]

    return count((1 << n) - 1, cap)


def solve(
    instance: Instance,
    routes: Sequence[FeasibleRoute],
    spec: SubproblemSpec,
    budget: float | None = None,
) -> SolveOutcome:
    """Solve one scalarized subproblem exactly.

    Raises BudgetExceeded when ``budget`` seconds elapse first.
    """
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    cap = instance.fleet_size if spec.fleet_cap is None else spec.fleet_cap
    stats = SolveStats()
    labels = full_labels(instance, routes, cap, deadline, stats)
    best = None
    for k, a, b, w in labels:
        if not spec.admits(b, k, instance.fleet_size):
            continue
        key = spec.sort_key(a, b, k, w)
        if best is None or key < best[0]:
            best = (key, w)
    stats.elapsed = time.monotonic() - start
    if best is None:
        return SolveOutcome("infeasible", None, stats)
    built = tuple(build_route(instance, order) for order in best[1])
    sol = Solution(routes=built, f1=sum(r.travel_time for r in built), f2=sum(r.compactness for r in built))
    return SolveOutcome("optimal", sol, stats)


# ---------------------------------------------------------------------------
# constraint checker


@dataclass(frozen=True)
class Violation:
    family: str
    message: str

    def __str__(self) -> str:
        return f"{self.family}: {self.message}"


FAMILIES = ("Eq3-4", "Eq5", "Eq6", "Eq7", "Eq8-9", "Eq10")


def check_solution(instance: Instance, solution: Solution) -> list[Violation]:
    """Verify a candidate solution against the model constraints; empty list means pass.

    Works from the route sequences alone: arcs are x[i][j] = 1 for consecutive
    nodes of depot -> sequence -> depot, u and v are the constructive cumulative
    load and time along each route.
    """
    out: list[Violation] = []
    n = instance.n_customers
    t, d = instance.travel_time, instance.distance
    C, T = instance.capacity, instance.time_limit

    visits = [0] * (n + 1)
    for route in solution.routes:
        for i in route.sequence:
            if 1 <= i <= n:
                visits[i] += 1
            elif i != 0:
                out.append(Violation("Eq3-4", f"unknown customer {i}"))
    for i in range(1, n + 1):
        if visits[i] != 1:
            out.append(Violation("Eq3-4", f"customer {i} visited {visits[i]} times"))

    if len(solution.routes) > instance.fleet_size:
        out.append(Violation("Eq5", f"{len(solution.routes)} routes exceed fleet size {instance.fleet_size}"))

    f1 = f2 = 0
    for k, route in enumerate(solution.routes):
        seq = route.sequence
        if seq.count(0):
            out.append(Violation("Eq5", f"route {k} leaves the depot {seq.count(0) + 1} times"))
        if not seq:
            out.append(Violation("Eq6", f"route {k} has no arcs"))
            continue
        nodes = [0, *seq, 0]
        arcs = list(zip(nodes, nodes[1:]))
        flow_in: dict[int, int] = {}
        flow_out: dict[int, int] = {}
        for i, j in arcs:
            flow_out[i] = flow_out.get(i, 0) + 1
            flow_in[j] = flow_in.get(j, 0) + 1
            if i == j:
                out.append(Violation("Eq6", f"route {k} has a self-loop at node {i}"))
        for node in set(flow_in) | set(flow_out):
            if flow_in.get(node, 0) != flow_out.get(node, 0):
                out.append(Violation("Eq6", f"route {k} breaks flow conservation at node {node}"))
        arc_time = sum(t[i][j] for i, j in arcs)
        if route.travel_time != arc_time:
            out.append(Violation("Eq6", f"route {k} records travel time {route.travel_time}, its arcs total {arc_time}"))
        f1 += arc_time

        custs = [i for i in seq if i != 0]
        # MTZ load witness: u_j = cumulative load on arrival-after-service at j
        u, acc = {}, 0
        for i in custs:
            acc += instance.demand[i]
            u[i] = acc
        arc_set = set(arcs)
        mtz_ok = all(u[i] <= C for i in custs) and all(
            u[a] - u[b] <= C * (1 - ((a, b) in arc_set)) - instance.demand[b]
            for a in u
            for b in u
            if a != b
        )
        if not mtz_ok:
            out.append(Violation("Eq7", f"route {k} load {acc} exceeds capacity {C}"))

        # time witness: v_j = cumulative travel + service up to j; the return arc adds unload time
        clock, prev = 0, 0
        for i in seq:
            clock += t[prev][i] + instance.service_time[i]
            prev = i
        duration = clock + t[prev][0] + instance.unload_time
        if duration > T:
            out.append(Violation("Eq8-9", f"route {k} duration {duration} exceeds time limit {T}"))

        comp = sum(d[i][j] for i, j in combinations(sorted(set(custs)), 2))
        if route.compactness != comp:
            out.append(Violation("Eq10", f"route {k} records compactness {route.compactness}, co-membership gives {comp}"))
        f2 += comp

    if solution.f1 != f1:
        out.append(Violation("Eq6", f"recorded f1 {solution.f1} differs from arc total {f1}"))
    if solution.f2 != f2:
        out.append(Violation("Eq10", f"recorded f2 {solution.f2} differs from co-membership total {f2}"))
    return out
