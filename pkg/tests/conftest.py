from __future__ import annotations

from pathlib import Path

import pytest

from compactvrp import formats
from compactvrp.generate import GenConfig, generate

FIXTURES = Path(__file__).parent / "fixtures"
PROFILES = ("clustered", "ring", "uniform")

_acceptance_lines: list[str] = []


def load_fixture(name: str):
    with open(FIXTURES / f"{name}.json", "rb") as fh:
        return formats.load_instance(fh)


def seeded_instance(seed: int, n: int | None = None, **kw):
    """The seeded fixture family: n cycles through 5..9, profiles rotate."""
    n = 5 + seed % 5 if n is None else n
    return generate(GenConfig(n=n, seed=seed, profile=PROFILES[seed % 3], **kw))


@pytest.fixture
def tiny1():
    return load_fixture("tiny1")


@pytest.fixture
def threshold2():
    return load_fixture("threshold2")


@pytest.fixture
def fixture7():
    return load_fixture("fixture7")


@pytest.fixture
def fixture9():
    return load_fixture("fixture9")


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(criterion: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {criterion}"
        if detail:
            line += f"  [{detail}]"
        _acceptance_lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
