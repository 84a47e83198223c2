"""Regenerate the bundled fixtures in tests/fixtures/.

    python scripts/make_fixtures.py

Instances come from the seeded generator. Mutation fixtures perturb the
oracle's front solutions on fixture7 so that exactly one constraint family
is violated; each candidate is certified with check_solution before it is
written.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from compactvrp import formats
from compactvrp.generate import GenConfig, generate
from compactvrp.model import Solution, build_route, make_instance
from compactvrp.moo import supported
from compactvrp.oracle import oracle_front
from compactvrp.solver import check_solution

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def tiny1():
    return make_instance(
        name="tiny1",
        travel_time=[[0, 5], [5, 0]],
        distance=[[0, 4], [4, 0]],
        demand=[3],
        service_time=[2],
        unload_time=1,
        capacity=10,
        time_limit=13,
        fleet_size=1,
    )


def threshold2():
    # merging 1 and 2 saves travel time but costs d12 = 9 in compactness
    return make_instance(
        name="threshold2",
        travel_time=[[0, 10, 10], [10, 0, 2], [10, 2, 0]],
        distance=[[0, 10, 10], [10, 0, 9], [10, 9, 0]],
        demand=[1, 1],
        service_time=[0, 0],
        unload_time=0,
        capacity=5,
        time_limit=100,
        fleet_size=2,
    )


def solution_with(instance, routes, f1_shift=0, f2_shift=0) -> Solution:
    built = tuple(build_route(instance, r) for r in routes)
    return Solution(
        routes=built,
        f1=sum(r.travel_time for r in built) + f1_shift,
        f2=sum(r.compactness for r in built) + f2_shift,
    )


def only(instance, sol, family) -> bool:
    fams = {v.family for v in check_solution(instance, sol)}
    return fams == {family}


def mutations(instance, base: list[list[int]]) -> dict[str, Solution]:
    out = {}
    # Eq3-4: a customer copied into a second route
    for a, b in itertools.permutations(range(len(base)), 2):
        routes = [list(r) for r in base]
        routes[b].append(routes[a][0])
        sol = solution_with(instance, routes)
        if only(instance, sol, "Eq3-4"):
            out["Eq3-4"] = sol
            break
    # Eq5: a route that returns to the depot mid-way and departs again
    for k, r in enumerate(base):
        if len(r) >= 2:
            routes = [list(x) for x in base]
            routes[k] = [r[0], 0, *r[1:]]
            sol = solution_with(instance, routes)
            if only(instance, sol, "Eq5"):
                out["Eq5"] = sol
                break
    # Eq6: recorded total travel time disagrees with the traversed arcs
    out["Eq6"] = solution_with(instance, base, f1_shift=7)
    # Eq7 and Eq8-9: move one customer into another route
    for a, b in itertools.permutations(range(len(base)), 2):
        for c in base[a]:
            routes = [list(r) for r in base]
            routes[a].remove(c)
            routes[b].append(c)
            routes = [r for r in routes if r]
            sol = solution_with(instance, routes)
            for fam in ("Eq7", "Eq8-9"):
                if fam not in out and only(instance, sol, fam):
                    out[fam] = sol
    # Eq10: recorded compactness disagrees with route co-membership
    out["Eq10"] = solution_with(instance, base, f2_shift=5)
    return out


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "mutations").mkdir(exist_ok=True)
    # tight time limit so Eq8-9 can be violated without breaking capacity
    fixture7 = generate(GenConfig(n=7, seed=3, profile="clustered", capacity_factor=3.0, time_factor=1.6))
    fixture7 = make_instance(
        name="fixture7",
        travel_time=fixture7.travel_time,
        distance=fixture7.distance,
        demand=fixture7.demand[1:],
        service_time=fixture7.service_time[1:],
        unload_time=fixture7.unload_time,
        capacity=fixture7.capacity,
        time_limit=fixture7.time_limit,
        fleet_size=fixture7.fleet_size,
    )
    fixture9 = generate(GenConfig(n=9, seed=1, profile="clustered"))
    instances = {"tiny1": tiny1(), "threshold2": threshold2(), "fixture7": fixture7, "fixture9": fixture9}
    for name, inst in instances.items():
        (OUT / f"{name}.json").write_bytes(formats.dump_instance(inst))

    for name in ("fixture7", "fixture9"):
        front = oracle_front(instances[name])
        vecs = front.vectors()
        nonsup = sorted(set(vecs) - set(supported(vecs)))
        print(f"{name}: {len(front)} front points, non-supported {nonsup}")

    front = oracle_front(fixture7)
    (OUT / "fixture7_solution.json").write_bytes(formats.dump_solution(front.points[len(front) // 2].solution, "fixture7"))
    muts: dict[str, Solution] = {}
    for point in front.points:
        found = mutations(fixture7, [list(r.sequence) for r in point.solution.routes])
        muts = {**found, **muts}
    for fam in ("Eq3-4", "Eq5", "Eq6", "Eq7", "Eq8-9", "Eq10"):
        if fam not in muts:
            raise SystemExit(f"no single-family mutation found for {fam}")
        path = OUT / "mutations" / f"{fam.lower()}.json"
        path.write_bytes(formats.dump_solution(muts[fam], "fixture7"))
        print(f"{path.name}: {[str(v) for v in check_solution(fixture7, muts[fam])]}")


if __name__ == "__main__":
    main()
