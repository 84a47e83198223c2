"""Brute-force ground truth.

Enumerates every set partition of the customers (restricted growth strings),
prices each block by trying all permutations, and tests capacity and duration
directly. Nothing here calls into ``routes`` or ``solver``; only the Instance
type and the output containers are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .model import FrontPoint, Instance, ParetoFront, Solution, build_route

DEFAULT_GUARD = 9


class GuardExceeded(ValueError):
    """The instance is too large for exhaustive enumeration."""


def restricted_growth_strings(n: int, max_blocks: int | None = None) -> Iterator[list[int]]:
    """Yield every restricted growth string of length n with at most ``max_blocks`` distinct values.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); each string encodes one set partition.
    """
    if n == 0:
        yield []
        return
    limit = n if max_blocks is None else max_blocks
    a = [0] * n
    mx = [0] * n  # mx[i] = max(a[:i+1])

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            yield a
            return
        top = mx[i - 1] + 1
        for v in range(min(top, limit - 1) + 1):
            a[i] = v
            mx[i] = max(mx[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)


def set_partitions(items: list[int], max_blocks: int | None = None) -> Iterator[list[list[int]]]:
    for rgs in restricted_growth_strings(len(items), max_blocks):
        blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1 if rgs else 0)]
        for item, b in zip(items, rgs):
            blocks[b].append(item)
        yield blocks


@dataclass(frozen=True)
class Block:
    customers: tuple[int, ...]
    feasible: bool
    travel: int
    order: tuple[int, ...]
    compactness: int


def _tour_length(inst: Instance, order: tuple[int, ...]) -> int:
    t = inst.travel_time
    total = t[0][order[0]] + t[order[-1]][0]
    for a, b in zip(order, order[1:]):
        total += t[a][b]
    return total


def _price_block(inst: Instance, customers: tuple[int, ...]) -> Block:
    load = sum(inst.demand[i] for i in customers)
    comp = 0
    for x in range(len(customers)):
        for y in range(x + 1, len(customers)):
            comp += inst.distance[customers[x]][customers[y]]
    if load > inst.capacity:
        return Block(customers, False, 0, (), comp)
    best, best_order = None, ()
    # permutations of a sorted tuple come out in lexicographic order; strict < keeps the first argmin
    for order in permutations(customers):
        cost = _tour_length(inst, order)
        if best is None or cost < best:
            best, best_order = cost, order
    duration = best + sum(inst.service_time[i] for i in customers) + inst.unload_time
    return Block(customers, duration <= inst.time_limit, best, best_order, comp)


@dataclass(frozen=True)
class Partition:
    f1: int
    f2: int
    routes_used: int
    witness: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PartitionTable:
    enumerated: int
    feasible: tuple[Partition, ...]


@lru_cache(maxsize=64)
def partition_table(instance: Instance, max_customers_guard: int = DEFAULT_GUARD) -> PartitionTable:
    """Every partition into at most fleet_size blocks; the feasible ones with their objective values."""
    n = instance.n_customers
    if n > max_customers_guard:
        raise GuardExceeded(f"{n} customers exceeds the oracle guard of {max_customers_guard}")
    blocks: dict[tuple[int, ...], Block] = {}
    enumerated = 0
    feasible = []
    for partition in set_partitions(list(instance.customers), instance.fleet_size):
        enumerated += 1
        priced = []
        for b in partition:
            key = tuple(b)
            if key not in blocks:
                blocks[key] = _price_block(instance, key)
            priced.append(blocks[key])
        if all(b.feasible for b in priced):
            feasible.append(
                Partition(
                    f1=sum(b.travel for b in priced),
                    f2=sum(b.compactness for b in priced),
                    routes_used=len(priced),
                    witness=tuple(sorted(b.order for b in priced)),
                )
            )
    return PartitionTable(enumerated, tuple(feasible))


def feasible_blocks(instance: Instance, max_customers_guard: int = DEFAULT_GUARD) -> dict[tuple[int, ...], Block]:
    """Naive subset filter: every non-empty customer subset that forms a feasible route."""
    n = instance.n_customers
    if n > max_customers_guard:
        raise GuardExceeded(f"{n} customers exceeds the oracle guard of {max_customers_guard}")
    out = {}
    for mask in range(1, 1 << n):
        members = tuple(i + 1 for i in range(n) if mask >> i & 1)
        block = _price_block(instance, members)
        if block.feasible:
            out[members] = block
    return out


def _solution(instance: Instance, p: Partition) -> Solution:
    built = tuple(build_route(instance, order) for order in p.witness)
    return Solution(routes=built, f1=p.f1, f2=p.f2)


def oracle_front(instance: Instance, max_customers_guard: int = DEFAULT_GUARD) -> ParetoFront:
    table = partition_table(instance, max_customers_guard)
    best: dict[tuple[int, int], Partition] = {}
    for p in table.feasible:
        v = (p.f1, p.f2)
        cur = best.get(v)
        if cur is None or (p.routes_used, p.witness) < (cur.routes_used, cur.witness):
            best[v] = p
    vectors = sorted(best)
    kept = [
        v for v in vectors
        if not any(w[0] <= v[0] and w[1] <= v[1] and w != v for w in vectors)
    ]
    points = tuple(FrontPoint(v[0], v[1], _solution(instance, best[v])) for v in kept)
    return ParetoFront(points=points, instance=instance.name, method="oracle")


def _scalar_key(spec, p: Partition) -> tuple:
    if spec.mode == "weighted":
        value = spec.w1 * p.f1 * spec.r2 + spec.w2 * p.f2 * spec.r1
        return (value, p.f1, p.f2, p.routes_used, p.witness)
    return (p.f1, p.f2, p.routes_used, p.witness)


def oracle_scalarized(instance: Instance, spec, max_customers_guard: int = DEFAULT_GUARD):
    """Exhaustive answer to a SubproblemSpec: weighted value (or f1 under the f2 bound),
    then f1, f2, fewer routes, smallest witness."""
    from .solver import SolveOutcome  # result container only

    table = partition_table(instance, max_customers_guard)
    cap = instance.fleet_size if spec.fleet_cap is None else spec.fleet_cap
    candidates = [
        p for p in table.feasible
        if p.routes_used <= cap
        and (spec.mode != "epsilon" or spec.epsilon is None or p.f2 <= spec.epsilon)
    ]
    if not candidates:
        return SolveOutcome("infeasible")
    return SolveOutcome("optimal", _solution(instance, min(candidates, key=lambda p: _scalar_key(spec, p))))
