from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compactvrp.model import dominates
from compactvrp.moo import (
    SweepAborted,
    epsilon_grid,
    epsilon_sweep,
    filter_nondominated,
    lower_hull,
    payoff_table,
    supported,
    weighted_sum_sweep,
)
from compactvrp.oracle import oracle_front
from compactvrp.routes import enumerate_feasible_routes

from conftest import seeded_instance


def setup(inst):
    routes = enumerate_feasible_routes(inst)
    return routes, payoff_table(inst, routes)


def test_filter_drops_dominated():
    assert filter_nondominated([(10, 5), (9, 6), (10, 4)]).vectors() == [(9, 6), (10, 4)]


def test_filter_collapses_duplicates():
    assert filter_nondominated([(7, 7), (7, 7)]).vectors() == [(7, 7)]


def test_filter_empty():
    assert filter_nondominated([]).vectors() == []


@settings(max_examples=300)
@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=40))
def test_filter_matches_quadratic_oracle(points):
    naive = sorted({p for p in points if not any(dominates(q, p) for q in points)})
    assert filter_nondominated(points).vectors() == naive


def test_payoff_single_customer(tiny1):
    _, table = setup(tiny1)
    assert table.f1_min_point == table.f2_min_point == (10, 0)
    assert table.r1 == table.r2 == 0


def test_payoff_threshold(threshold2):
    _, table = setup(threshold2)
    assert table.f1_min_point == (22, 9)
    assert table.f2_min_point == (40, 0)
    assert (table.r1, table.r2) == (18, 9)


@pytest.mark.parametrize("seed", range(1, 8))
def test_payoff_anchors_are_oracle_extremes(seed):
    inst = seeded_instance(seed)
    _, table = setup(inst)
    front = oracle_front(inst)
    assert table.f1_min_point == front.points[0].vector
    assert table.f2_min_point == front.points[-1].vector


def test_epsilon_grid_exact():
    class T:
        f1_min_point = (0, 10)
        r2 = 7

    assert epsilon_grid(T, 4) == [10, Fraction(33, 4), Fraction(13, 2), Fraction(19, 4)]


def test_weighted_two_points_gives_anchors(fixture9):
    routes, table = setup(fixture9)
    rep = weighted_sum_sweep(fixture9, routes, table, q=2)
    assert rep.front.vectors() == [table.f1_min_point, table.f2_min_point]


def test_weighted_degenerate_single_solve(tiny1):
    routes, table = setup(tiny1)
    rep = weighted_sum_sweep(tiny1, routes, table, q=10)
    assert rep.front.vectors() == [(10, 0)]
    assert rep.solver_invocations == 1


def test_weighted_needs_two_points(fixture7):
    routes, table = setup(fixture7)
    with pytest.raises(ValueError):
        weighted_sum_sweep(fixture7, routes, table, q=1)
    with pytest.raises(ValueError):
        epsilon_sweep(fixture7, routes, table, q=1)


@pytest.mark.parametrize("seed", range(1, 11))
def test_weighted_front_on_lower_hull(seed):
    inst = seeded_instance(seed)
    routes, table = setup(inst)
    rep = weighted_sum_sweep(inst, routes, table, q=10)
    oracle = oracle_front(inst).vectors()
    assert set(rep.front.vectors()) <= set(supported(oracle))
    assert rep.duplicates_discarded == rep.solver_invocations - len({(f1, f2) for _, f1, f2 in rep.trace})


def test_non_supported_point_missed_by_weighted_only(fixture9):
    routes, table = setup(fixture9)
    oracle = oracle_front(fixture9).vectors()
    nonsup = set(oracle) - set(supported(oracle))
    assert nonsup
    w = set(weighted_sum_sweep(fixture9, routes, table, q=10).front.vectors())
    e = set(epsilon_sweep(fixture9, routes, table, q=10).front.vectors())
    assert nonsup <= e and not (nonsup & w)


@pytest.mark.parametrize("seed", range(1, 13))
def test_epsilon_front_properties(seed):
    inst = seeded_instance(seed)
    routes, table = setup(inst)
    oracle = oracle_front(inst).vectors()
    on = epsilon_sweep(inst, routes, table, q=10, bypass=True)
    off = epsilon_sweep(inst, routes, table, q=10, bypass=False)
    assert on.front.vectors() == off.front.vectors() == oracle
    assert on.solver_invocations <= off.solver_invocations
    assert on.solver_invocations + on.bypassed == on.grid_points_requested
    assert off.bypassed == 0
    w = weighted_sum_sweep(inst, routes, table, q=10)
    assert set(w.front.vectors()) <= set(on.front.vectors())


@pytest.mark.parametrize("seed", range(1, 13))
def test_grid_monotonicity(seed):
    inst = seeded_instance(seed)
    routes, table = setup(inst)
    for refine in (True, False):
        rep = epsilon_sweep(inst, routes, table, q=10, bypass=False, refine=refine)
        seq = [(f1, f2) for _, f1, f2 in rep.trace]
        assert all(a[0] <= b[0] and a[1] >= b[1] for a, b in zip(seq, seq[1:]))


@pytest.mark.parametrize("seed", range(1, 9))
def test_plain_grid_is_a_subset_of_the_front(seed):
    inst = seeded_instance(seed)
    routes, table = setup(inst)
    oracle = set(oracle_front(inst).vectors())
    for bypass in (True, False):
        rep = epsilon_sweep(inst, routes, table, q=10, bypass=bypass, refine=False)
        assert set(rep.front.vectors()) <= oracle
        assert rep.refinement_invocations == 0
        assert rep.solver_invocations + rep.bypassed == 10
        assert table.f1_min_point in rep.front.vectors()


def test_plain_grid_bypass_skips_redundant_levels(fixture9):
    routes, table = setup(fixture9)
    on = epsilon_sweep(fixture9, routes, table, q=10, refine=False)
    off = epsilon_sweep(fixture9, routes, table, q=10, bypass=False, refine=False)
    assert on.front.vectors() == off.front.vectors()
    assert on.solver_invocations < off.solver_invocations
    assert off.duplicates_discarded == off.solver_invocations - len(off.front)


def test_budget_abort_carries_partial_report(fixture9):
    routes, table = setup(fixture9)
    with pytest.raises(SweepAborted) as exc:
        epsilon_sweep(fixture9, routes, table, q=10, budget=-1.0)
    assert len(exc.value.report.front) == 0
    with pytest.raises(SweepAborted):
        weighted_sum_sweep(fixture9, routes, table, q=10, budget=-1.0)


def test_lower_hull_and_supported():
    pts = [(0, 10), (1, 9), (2, 5), (4, 4), (6, 0)]
    assert lower_hull(pts) == [(0, 10), (2, 5), (6, 0)]
    # (4, 4) lies above the segment (2,5)-(6,0); (1, 9) above (0,10)-(2,5)
    assert supported(pts) == [(0, 10), (2, 5), (6, 0)]
    assert supported([(0, 4), (1, 2), (2, 0)]) == [(0, 4), (1, 2), (2, 0)]


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50)), min_size=1, max_size=25))
def test_supported_points_minimise_some_weighting(points):
    front = filter_nondominated(points).vectors()
    sup = set(supported(front))
    # a point is supported iff it minimises lam*f1 + (1-lam)*f2 for some lam in [0, 1];
    # breakpoints between hull segments suffice, plus the endpoints
    lams = {Fraction(0), Fraction(1)}
    for a in front:
        for b in front:
            if a[0] < b[0]:
                s = Fraction(a[1] - b[1], b[0] - a[0])  # lam / (1 - lam)
                lams.add(s / (1 + s))
    minimisers = set()
    for lam in lams:
        best = min(lam * f1 + (1 - lam) * f2 for f1, f2 in front)
        minimisers |= {v for v in front if lam * v[0] + (1 - lam) * v[1] == best}
    assert sup == minimisers
