"""Domain types for the bi-objective compact VRP.

Node 0 is the depot, customers are 1..n. Every quantity is an integer so that
objective comparisons and dominance tests are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


class ValidationError(ValueError):
    """An instance or solution document violates a structural invariant."""


@dataclass(frozen=True)
class Instance:
    """A validated problem instance.

    ``demand`` and ``service_time`` are padded with a zero entry for the depot,
    so ``demand[i]`` is the volume of customer ``i``.
    """

    name: str
    n_customers: int
    travel_time: Matrix
    distance: Matrix
    demand: tuple[int, ...]
    service_time: tuple[int, ...]
    unload_time: int
    capacity: int
    time_limit: int
    fleet_size: int

    def __post_init__(self) -> None:
        validate_instance(self)

    @property
    def customers(self) -> range:
        return range(1, self.n_customers + 1)

    def singleton_duration(self, i: int) -> int:
        t = self.travel_time
        return t[0][i] + self.service_time[i] + t[i][0] + self.unload_time


def _check_matrix(name: str, m: Matrix, size: int) -> None:
    if len(m) != size or any(len(row) != size for row in m):
        raise ValidationError(f"{name} matrix must be {size}x{size}")
    for i, row in enumerate(m):
        if any(v < 0 for v in row):
            raise ValidationError(f"{name} matrix has a negative entry in row {i}")
        if row[i] != 0:
            raise ValidationError(f"{name} matrix diagonal entry {i} is not zero")


def validate_instance(inst: Instance) -> None:
    n = inst.n_customers
    if n < 1:
        raise ValidationError("n_customers must be at least 1")
    if inst.fleet_size < 1:
        raise ValidationError("fleet_size must be at least 1")
    if inst.capacity < 1 or inst.time_limit < 0 or inst.unload_time < 0:
        raise ValidationError("capacity must be positive; time_limit and unload_time non-negative")
    _check_matrix("travel_time", inst.travel_time, n + 1)
    _check_matrix("distance", inst.distance, n + 1)
    d = inst.distance
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if d[i][j] != d[j][i]:
                raise ValidationError("distance matrix not symmetric")
    if len(inst.demand) != n + 1 or len(inst.service_time) != n + 1:
        raise ValidationError("demand and service_time need one entry per customer")
    if inst.demand[0] != 0 or inst.service_time[0] != 0:
        raise ValidationError("depot entries of demand and service_time must be zero")
    for i in inst.customers:
        # positive demand keeps cumulative load strictly increasing along a route
        if inst.demand[i] < 1:
            raise ValidationError(f"demand of customer {i} must be positive")
        if inst.demand[i] > inst.capacity:
            raise ValidationError(f"demand of customer {i} exceeds capacity")
        if inst.service_time[i] < 0:
            raise ValidationError(f"service time of customer {i} is negative")
        if inst.singleton_duration(i) > inst.time_limit:
            raise ValidationError(f"singleton route infeasible for customer {i}")


def make_instance(
    *,
    name: str,
    travel_time: Sequence[Sequence[int]],
    distance: Sequence[Sequence[int]],
    demand: Sequence[int],
    service_time: Sequence[int],
    unload_time: int,
    capacity: int,
    time_limit: int,
    fleet_size: int,
) -> Instance:
    """Build an Instance from per-customer lists (length n, no depot entry)."""
    return Instance(
        name=name,
        n_customers=len(demand),
        travel_time=tuple(tuple(int(v) for v in row) for row in travel_time),
        distance=tuple(tuple(int(v) for v in row) for row in distance),
        demand=(0, *map(int, demand)),
        service_time=(0, *map(int, service_time)),
        unload_time=int(unload_time),
        capacity=int(capacity),
        time_limit=int(time_limit),
        fleet_size=int(fleet_size),
    )


@dataclass(frozen=True)
class Route:
    """One vehicle route; ``schedule`` holds cumulative (load, time) after each visit."""

    sequence: tuple[int, ...]
    travel_time: int
    duration: int
    load: int
    compactness: int
    schedule: tuple[tuple[int, int], ...]


def pair_compactness(instance: Instance, members: Iterable[int]) -> int:
    """Sum of distances over unordered customer pairs; depot excluded."""
    d = instance.distance
    return sum(d[i][j] for i, j in combinations(sorted(members), 2))


def build_route(instance: Instance, sequence: Sequence[int]) -> Route:
    """Compute a route's schedule and costs without judging feasibility."""
    t = instance.travel_time
    seq = tuple(int(i) for i in sequence)
    load = time = travel = 0
    prev = 0
    schedule = []
    for i in seq:
        travel += t[prev][i]
        load += instance.demand[i]
        time += t[prev][i] + instance.service_time[i]
        schedule.append((load, time))
        prev = i
    travel += t[prev][0]
    duration = time + t[prev][0] + instance.unload_time
    return Route(
        sequence=seq,
        travel_time=travel,
        duration=duration,
        load=load,
        compactness=pair_compactness(instance, (i for i in seq if i != 0)),
        schedule=tuple(schedule),
    )


@dataclass(frozen=True)
class Solution:
    routes: tuple[Route, ...]
    f1: int
    f2: int

    @property
    def sequences(self) -> list[list[int]]:
        return [list(r.sequence) for r in self.routes]

    def witness_key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical form used for lexicographic tie-breaking between solutions."""
        return tuple(sorted(r.sequence for r in self.routes))


def evaluate(instance: Instance, routes: Sequence[Sequence[int]]) -> Solution:
    """Evaluate a partition given as customer sequences.

    Capacity and duration are not enforced here; see ``solver.check_solution``.
    Empty sequences are dropped.
    """
    seen: dict[int, int] = {}
    for seq in routes:
        for i in seq:
            if not isinstance(i, int) or not 1 <= i <= instance.n_customers:
                raise ValidationError(f"invalid customer id {i!r}")
            seen[i] = seen.get(i, 0) + 1
    for i in instance.customers:
        count = seen.get(i, 0)
        if count != 1:
            raise ValidationError(f"customer {i} covered {count} times")
    built = tuple(build_route(instance, seq) for seq in routes if len(seq) > 0)
    return Solution(
        routes=built,
        f1=sum(r.travel_time for r in built),
        f2=sum(r.compactness for r in built),
    )


def dominates(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Weak Pareto dominance for minimisation: a <= b componentwise and a != b."""
    return a[0] <= b[0] and a[1] <= b[1] and a != b


@dataclass(frozen=True)
class FrontPoint:
    f1: int
    f2: int
    solution: Solution | None = None

    @property
    def vector(self) -> tuple[int, int]:
        return (self.f1, self.f2)


@dataclass(frozen=True)
class ParetoFront:
    """Mutually non-dominated points sorted by f1 ascending (so f2 strictly descending)."""

    points: tuple[FrontPoint, ...] = ()
    instance: str = ""
    method: str = ""

    def __post_init__(self) -> None:
        for a, b in zip(self.points, self.points[1:]):
            if not (a.f1 < b.f1 and a.f2 > b.f2):
                raise ValueError(f"front points {a.vector} and {b.vector} are not mutually non-dominated")

    def vectors(self) -> list[tuple[int, int]]:
        return [p.vector for p in self.points]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)
