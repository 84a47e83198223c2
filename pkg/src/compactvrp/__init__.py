"""Exact bi-objective vehicle routing: total travel time vs. route compactness."""

from .formats import load_instance, read_front, write_front
from .model import FrontPoint, Instance, ParetoFront, Route, Solution, evaluate
from .moo import PayoffTable, SweepReport, epsilon_sweep, filter_nondominated, payoff_table, weighted_sum_sweep
from .oracle import oracle_front, oracle_scalarized
from .routes import FeasibleRoute, enumerate_feasible_routes, held_karp
from .solver import SolveOutcome, SubproblemSpec, check_solution, solve

__all__ = [
    "FeasibleRoute",
    "FrontPoint",
    "Instance",
    "ParetoFront",
    "PayoffTable",
    "Route",
    "Solution",
    "SolveOutcome",
    "SubproblemSpec",
    "SweepReport",
    "check_solution",
    "enumerate_feasible_routes",
    "epsilon_sweep",
    "evaluate",
    "filter_nondominated",
    "held_karp",
    "load_instance",
    "oracle_front",
    "oracle_scalarized",
    "payoff_table",
    "read_front",
    "solve",
    "weighted_sum_sweep",
    "write_front",
]
