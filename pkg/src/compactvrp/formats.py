"""Instance, front and solution file formats.

All writers produce canonical bytes: fixed key order, one matrix row per line,
integers only, trailing newline.
"""

from __future__ import annotations

import csv
import io
import json
from typing import IO, Any, Union

from .model import FrontPoint, Instance, ParetoFront, Solution, ValidationError, build_route, make_instance

Source = Union[bytes, str, IO[bytes], IO[str]]

INSTANCE_KEYS = (
    "name",
    "n_customers",
    "capacity",
    "time_limit",
    "fleet_size",
    "unload_time",
    "demand",
    "service_time",
    "travel_time",
    "distance",
)


class ParseError(ValueError):
    """The document is not well-formed JSON/CSV of the expected shape."""


def _read_text(source: Source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        return source.decode("utf-8")
    return source


def _parse_json(source: Source) -> Any:
    try:
        return json.loads(_read_text(source))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list")
    return [_int(v, what) for v in value]


def load_instance(source: Source) -> Instance:
    doc = _parse_json(source)
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    missing = [k for k in INSTANCE_KEYS if k not in doc]
    if missing:
        raise ParseError(f"instance document missing keys: {', '.join(missing)}")
    if not isinstance(doc["name"], str):
        raise ParseError("name must be a string")
    n = _int(doc["n_customers"], "n_customers")
    demand = _int_list(doc["demand"], "demand")
    service = _int_list(doc["service_time"], "service_time")
    if len(demand) != n or len(service) != n:
        raise ValidationError("demand and service_time must have n_customers entries")
    if not isinstance(doc["travel_time"], list) or not isinstance(doc["distance"], list):
        raise ParseError("matrices must be lists of rows")
    travel = [_int_list(row, "travel_time") for row in doc["travel_time"]]
    dist = [_int_list(row, "distance") for row in doc["distance"]]
    return make_instance(
        name=doc["name"],
        travel_time=travel,
        distance=dist,
        demand=demand,
        service_time=service,
        unload_time=_int(doc["unload_time"], "unload_time"),
        capacity=_int(doc["capacity"], "capacity"),
        time_limit=_int(doc["time_limit"], "time_limit"),
        fleet_size=_int(doc["fleet_size"], "fleet_size"),
    )


def _row(values) -> str:
    return "[" + ", ".join(str(int(v)) for v in values) + "]"


def _matrix(rows) -> str:
    return "[\n    " + ",\n    ".join(_row(r) for r in rows) + "\n  ]"


def dump_instance(inst: Instance) -> bytes:
    fields = {
        "name": json.dumps(inst.name),
        "n_customers": str(inst.n_customers),
        "capacity": str(inst.capacity),
        "time_limit": str(inst.time_limit),
        "fleet_size": str(inst.fleet_size),
        "unload_time": str(inst.unload_time),
        "demand": _row(inst.demand[1:]),
        "service_time": _row(inst.service_time[1:]),
        "travel_time": _matrix(inst.travel_time),
        "distance": _matrix(inst.distance),
    }
    body = ",\n".join(f'  "{k}": {fields[k]}' for k in INSTANCE_KEYS)
    return ("{\n" + body + "\n}\n").encode("utf-8")


def _routes_text(solution: Solution | None) -> str:
    if solution is None:
        return "[]"
    return "[" + ", ".join(_row(seq) for seq in solution.witness_key()) + "]"


def write_front(front: ParetoFront, fmt: str = "json") -> bytes:
    """Serialize a front as ``json`` (with witness routes) or ``csv`` (vectors only)."""
    if fmt == "csv":
        lines = ["f1,f2"] + [f"{p.f1},{p.f2}" for p in front.points]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt != "json":
        raise ValueError(f"unknown front format {fmt!r}")
    points = ",\n".join(
        f'    {{"f1": {p.f1}, "f2": {p.f2}, "routes": {_routes_text(p.solution)}}}' for p in front.points
    )
    points_block = "[\n" + points + "\n  ]" if front.points else "[]"
    text = (
        "{\n"
        f'  "instance": {json.dumps(front.instance)},\n'
        f'  "method": {json.dumps(front.method)},\n'
        f'  "points": {points_block}\n'
        "}\n"
    )
    return text.encode("utf-8")


def _sequences(value: Any) -> list[list[int]]:
    if not isinstance(value, list):
        raise ParseError("routes must be a list of lists")
    return [_int_list(r, "route") for r in value]


def read_front(source: Source, instance: Instance | None = None) -> ParetoFront:
    """Read a front-json document, or a front-csv document when it starts with the csv header.

    With an instance, witness routes are rebuilt into Solutions carrying the
    recorded objective values.
    """
    text = _read_text(source)
    if text.startswith("f1,f2"):
        rows = list(csv.reader(io.StringIO(text)))[1:]
        try:
            pts = tuple(FrontPoint(int(a), int(b)) for a, b in rows)
        except ValueError as exc:
            raise ParseError(f"malformed front csv: {exc}") from exc
        return ParetoFront(points=pts)
    doc = _parse_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise ParseError("front document needs a points list")
    pts = []
    for p in doc["points"]:
        f1, f2 = _int(p.get("f1"), "f1"), _int(p.get("f2"), "f2")
        sol = None
        if instance is not None:
            sol = solution_from_routes(instance, _sequences(p.get("routes", [])), f1, f2)
        pts.append(FrontPoint(f1, f2, sol))
    return ParetoFront(points=tuple(pts), instance=str(doc.get("instance", "")), method=str(doc.get("method", "")))


def solution_from_routes(instance: Instance, routes: list[list[int]], f1: int, f2: int) -> Solution:
    """Build a candidate Solution with the recorded objective values, for checking."""
    for seq in routes:
        for i in seq:
            if not 0 <= i <= instance.n_customers:
                raise ValidationError(f"unknown node id {i}")
    return Solution(routes=tuple(build_route(instance, seq) for seq in routes), f1=f1, f2=f2)


def read_solutions(source: Source, instance: Instance) -> list[Solution]:
    """Read a solution document ``{"f1", "f2", "routes"}`` or every point of a front-json."""
    doc = _parse_json(source)
    if not isinstance(doc, dict):
        raise ParseError("solution document must be a JSON object")
    docs = doc["points"] if isinstance(doc.get("points"), list) else [doc]
    out = []
    for d in docs:
        if not isinstance(d, dict) or "routes" not in d:
            raise ParseError("solution entry needs routes")
        out.append(solution_from_routes(instance, _sequences(d["routes"]), _int(d.get("f1"), "f1"), _int(d.get("f2"), "f2")))
    return out


def dump_solution(solution: Solution, instance_name: str = "") -> bytes:
    text = (
        "{\n"
        f'  "instance": {json.dumps(instance_name)},\n'
        f'  "f1": {solution.f1},\n'
        f'  "f2": {solution.f2},\n'
        f'  "routes": [{", ".join(_row(r.sequence) for r in solution.routes)}]\n'
        "}\n"
    )
    return text.encode("utf-8")
