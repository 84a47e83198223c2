"""Seeded synthetic instances.

Customers are laid out on a 100 x 100 plane around a central depot; distances
are rounded Euclidean and travel times scale them with optional asymmetry.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .model import Instance, ValidationError, make_instance

PROFILES = ("clustered", "ring", "uniform")


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 1
    profile: str = "clustered"
    fleet_size: int | None = None  # default n: every customer may get its own route
    # vehicle capacity as a multiple of the mean demand
    capacity_factor: float = 3.0
    # time limit as a multiple of the longest singleton route duration
    time_factor: float = 2.5
    time_limit: int | None = None
    speed: float = 1.0
    asymmetry: float = 0.0
    max_demand: int = 5
    max_service: int = 3
    unload_time: int = 5


def _layout(rng: random.Random, n: int, profile: str) -> list[tuple[float, float]]:
    if profile == "uniform":
        return [(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(n)]
    if profile == "ring":
        out = []
        for k in range(n):
            ang = 2 * math.pi * k / n + rng.uniform(-0.2, 0.2)
            rad = rng.uniform(30, 45)
            out.append((50 + rad * math.cos(ang), 50 + rad * math.sin(ang)))
        return out
    if profile == "clustered":
        n_clusters = max(2, round(math.sqrt(n)))
        centres = []
        for k in range(n_clusters):
            ang = 2 * math.pi * k / n_clusters + rng.uniform(-0.3, 0.3)
            rad = rng.uniform(25, 40)
            centres.append((50 + rad * math.cos(ang), 50 + rad * math.sin(ang)))
        out = []
        for k in range(n):
            cx, cy = centres[k % n_clusters]
            out.append((cx + rng.gauss(0, 6), cy + rng.gauss(0, 6)))
        return out
    raise ValueError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")


def generate(cfg: GenConfig) -> Instance:
    """Build a deterministic instance; raises ValidationError if the knobs make a singleton route infeasible."""
    if cfg.n < 1:
        raise ValidationError("n must be at least 1")
    rng = random.Random(cfg.seed)
    pts = [(50.0, 50.0)] + _layout(rng, cfg.n, cfg.profile)
    size = cfg.n + 1
    dist = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            d = round(math.dist(pts[i], pts[j]))
            dist[i][j] = dist[j][i] = d
    travel = [
        [0 if i == j else round(dist[i][j] * cfg.speed * (1 + cfg.asymmetry * rng.random())) for j in range(size)]
        for i in range(size)
    ]
    demand = [rng.randint(1, cfg.max_demand) for _ in range(cfg.n)]
    service = [rng.randint(0, cfg.max_service) for _ in range(cfg.n)]
    mean_demand = sum(demand) / cfg.n
    capacity = max(max(demand), round(cfg.capacity_factor * mean_demand))
    singleton = max(travel[0][i] + service[i - 1] + travel[i][0] + cfg.unload_time for i in range(1, size))
    time_limit = cfg.time_limit if cfg.time_limit is not None else math.ceil(cfg.time_factor * singleton)
    if time_limit < singleton:
        raise ValidationError(f"time limit {time_limit} makes a singleton route infeasible (needs {singleton})")
    fleet = cfg.fleet_size if cfg.fleet_size is not None else cfg.n
    return make_instance(
        name=f"{cfg.profile}-n{cfg.n}-s{cfg.seed}",
        travel_time=travel,
        distance=dist,
        demand=demand,
        service_time=service,
        unload_time=cfg.unload_time,
        capacity=capacity,
        time_limit=time_limit,
        fleet_size=fleet,
    )
