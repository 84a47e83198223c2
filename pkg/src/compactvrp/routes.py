"""Feasible route enumeration with Held-Karp tour costs.

Customer ``i`` maps to bit ``i - 1`` of a subset mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .model import Instance, pair_compactness

INF = float("inf")


@dataclass(frozen=True)
class FeasibleRoute:
    members: int
    best_travel_time: int
    best_order: tuple[int, ...]
    load: int
    compactness: int
    min_duration: int

    @property
    def customers(self) -> tuple[int, ...]:
        return tuple(sorted(self.best_order))


def mask_of(customers: Iterable[int]) -> int:
    m = 0
    for i in customers:
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _suffix_tables(instance: Instance, masks: list[int]) -> dict[int, dict[int, int]]:
    """Cheapest path cost starting at customer ``first``, visiting all of ``mask``, ending at the depot.

    ``masks`` must be closed under removing one element and sorted by popcount.
    """
    t = instance.travel_time
    table: dict[int, dict[int, int]] = {}
    for mask in masks:
        nodes = members_of(mask)
        row: dict[int, int] = {}
        if len(nodes) == 1:
            row[nodes[0]] = t[nodes[0]][0]
        else:
            for first in nodes:
                rest = table[mask & ~(1 << (first - 1))]
                tf = t[first]
                row[first] = min(tf[j] + c for j, c in rest.items())
        table[mask] = row
    return table


def _best_order(instance: Instance, mask: int, table: dict[int, dict[int, int]]) -> tuple[int, tuple[int, ...]]:
    # greedy reconstruction over exact suffix costs yields the lexicographically smallest argmin
    t = instance.travel_time
    row = table[mask]
    best = min(t[0][f] + c for f, c in row.items())
    order = []
    prev, remaining, target = 0, mask, best
    while remaining:
        row = table[remaining]
        for j in sorted(row):
            if t[prev][j] + row[j] == target:
                order.append(j)
                target -= t[prev][j]
                remaining &= ~(1 << (j - 1))
                prev = j
                break
    return best, tuple(order)


def _downward_closure(mask: int) -> list[int]:
    subs = []
    s = mask
    while s:
        subs.append(s)
        s = (s - 1) & mask
    subs.sort(key=lambda m: (bin(m).count("1"), m))
    return subs


def held_karp(instance: Instance, members: Iterable[int]) -> tuple[int, list[int]]:
    """Minimum depot-to-depot travel time over all orderings of ``members``.

    Ties go to the lexicographically smallest sequence.
    """
    mask = mask_of(members)
    if mask == 0:
        raise ValueError("held_karp needs at least one customer")
    table = _suffix_tables(instance, _downward_closure(mask))
    cost, order = _best_order(instance, mask, table)
    return cost, list(order)


def _duration_lower_bounds(instance: Instance) -> tuple[list[int], int]:
    t = instance.travel_time
    n = instance.n_customers
    cheapest_in = [0] + [min(t[i][j] for i in range(n + 1) if i != j) for j in range(1, n + 1)]
    cheapest_home = min(t[i][0] for i in range(1, n + 1))
    return cheapest_in, cheapest_home


def enumerate_feasible_routes(instance: Instance) -> list[FeasibleRoute]:
    """All customer subsets that fit capacity and the duration limit, sorted by mask.

    Candidate subsets are grown by adding customers above the current maximum;
    both the load and the duration lower bound are monotone under inclusion, so
    pruning a subset never hides a feasible superset.
    """
    n = instance.n_customers
    cap, limit = instance.capacity, instance.time_limit
    demand, service = instance.demand, instance.service_time
    cheapest_in, cheapest_home = _duration_lower_bounds(instance)
    base = cheapest_home + instance.unload_time

    candidates: list[int] = []
    stack = [(0, 0, 0, 0)]  # mask, highest member, load, bound contribution
    while stack:
        mask, top, load, bound = stack.pop()
        for i in range(top + 1, n + 1):
            l2 = load + demand[i]
            b2 = bound + cheapest_in[i] + service[i]
            if l2 > cap or base + b2 > limit:
                continue
            m2 = mask | (1 << (i - 1))
            candidates.append(m2)
            stack.append((m2, i, l2, b2))
    candidates.sort(key=lambda m: (bin(m).count("1"), m))
    table = _suffix_tables(instance, candidates)

    out = []
    for mask in sorted(candidates):
        cost, order = _best_order(instance, mask, table)
        svc = sum(service[i] for i in order)
        duration = cost + svc + instance.unload_time
        if duration > limit:
            continue
        out.append(
            FeasibleRoute(
                members=mask,
                best_travel_time=cost,
                best_order=order,
                load=sum(demand[i] for i in order),
                compactness=pair_compactness(instance, order),
                min_duration=duration,
            )
        )
    return out
