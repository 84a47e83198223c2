import json
import shutil

import pytest

from compactvrp import formats
from compactvrp.cli import EXIT_BUDGET, EXIT_INFEASIBLE, EXIT_INVALID, EXIT_OK, main
from compactvrp.model import make_instance

from conftest import FIXTURES


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    for name in ("tiny1", "fixture7", "fixture9", "threshold2"):
        shutil.copy(FIXTURES / f"{name}.json", tmp_path)
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_solve_econ_ten_point_grid(workdir, capsys):
    assert main(["solve", "--method", "econ", "--points", "10", "--budget", "1200", "fixture9.json"]) == EXIT_OK
    out = capsys.readouterr().out
    fields = dict(line.split("  ", 1) for line in out.splitlines() if "  " in line and not line.startswith(" "))
    fields = {k.strip(): v.strip() for k, v in fields.items()}
    assert int(fields["solver invocations"]) + int(fields["bypassed"]) == 10
    assert (workdir / "fixture9_econ.json").exists() and (workdir / "fixture9_econ.csv").exists()


def test_solve_wsum_degenerate(workdir):
    assert main(["solve", "--method", "wsum", "--points", "2", "tiny1.json"]) == EXIT_OK
    assert (workdir / "tiny1_wsum.csv").read_bytes() == b"f1,f2\n10,0\n"


def test_econ_matches_oracle_csv(workdir):
    assert main(["solve", "--method", "econ", "fixture7.json", "--format", "csv"]) == EXIT_OK
    assert main(["oracle", "fixture7.json", "--format", "csv"]) == EXIT_OK
    assert (workdir / "fixture7_econ.csv").read_bytes() == (workdir / "fixture7_oracle.csv").read_bytes()


def test_out_and_format(workdir):
    assert main(["solve", "fixture7.json", "--out", "res.json", "--format", "json"]) == EXIT_OK
    assert formats.read_front((workdir / "res.json").read_bytes()).method == "econ"
    assert main(["solve", "fixture7.json", "--out", "stem"]) == EXIT_OK
    assert (workdir / "stem.json").exists() and (workdir / "stem.csv").exists()


def test_no_bypass_same_front(workdir):
    assert main(["solve", "fixture9.json", "--out", "a"]) == EXIT_OK
    assert main(["solve", "fixture9.json", "--no-bypass", "--out", "b"]) == EXIT_OK
    assert (workdir / "a.csv").read_bytes() == (workdir / "b.csv").read_bytes()


def test_check_solver_output_passes(workdir, capsys):
    main(["solve", "fixture7.json", "--out", "sol"])
    assert main(["check", "fixture7.json", "sol.json"]) == EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


def test_check_duplicate_customer(workdir, capsys):
    doc = {"f1": 0, "f2": 0, "routes": [[1, 2, 3, 4, 5, 6, 7], [3]]}
    (workdir / "bad.json").write_text(json.dumps(doc))
    assert main(["check", "fixture7.json", "bad.json"]) != EXIT_OK
    assert "Eq3-4" in capsys.readouterr().out


@pytest.mark.parametrize("family", ["Eq3-4", "Eq5", "Eq6", "Eq7", "Eq8-9", "Eq10"])
def test_check_mutation_fixtures(workdir, capsys, family):
    path = FIXTURES / "mutations" / f"{family.lower()}.json"
    assert main(["check", "fixture7.json", str(path)]) == EXIT_INVALID
    lines = [l.strip() for l in capsys.readouterr().out.splitlines() if l.startswith("  ")]
    assert lines and all(l.startswith(family + ":") for l in lines)


def test_plot_and_overlay(workdir):
    main(["solve", "fixture9.json"])
    main(["solve", "fixture9.json", "--method", "wsum"])
    assert main(["plot", "fixture9_econ.json", "--overlay", "fixture9_wsum.json", "--out", "f.svg"]) == EXIT_OK
    svg = (workdir / "f.svg").read_bytes()
    assert b'data-method="econ"' in svg and b'data-method="wsum"' in svg


def test_plot_empty_front_warns(workdir, capsys):
    (workdir / "empty.json").write_bytes(b'{"instance": "x", "method": "econ", "points": []}')
    assert main(["plot", "empty.json"]) == EXIT_OK
    assert "empty" in capsys.readouterr().err
    assert (workdir / "empty.svg").exists()


def test_gen_deterministic(workdir, capsys):
    assert main(["gen", "--seed", "1", "--n", "9", "--profile", "clustered", "--out", "a.json"]) == EXIT_OK
    assert main(["gen", "--seed", "1", "--n", "9", "--profile", "clustered", "--out", "b.json"]) == EXIT_OK
    assert (workdir / "a.json").read_bytes() == (workdir / "b.json").read_bytes()
    assert main(["oracle", "a.json"]) == EXIT_OK
    assert len(formats.read_front((workdir / "a_oracle.json").read_bytes())) >= 2


def test_gen_singleton_and_stdout(workdir, capsys):
    assert main(["gen", "--n", "1"]) == EXIT_OK
    inst = formats.load_instance(capsys.readouterr().out)
    assert inst.n_customers == 1


def test_gen_rejects_infeasible_time_limit(workdir):
    assert main(["gen", "--n", "5", "--time-limit", "2"]) == EXIT_INVALID


def test_validation_exit_code(workdir):
    (workdir / "broken.json").write_text("{oops")
    assert main(["solve", "broken.json"]) == EXIT_INVALID
    assert main(["solve", "missing.json"]) == EXIT_INVALID


def test_oracle_guard_exit_code(workdir):
    assert main(["oracle", "fixture9.json", "--guard", "5"]) == EXIT_INVALID


def test_infeasible_exit_code(workdir):
    inst = make_instance(
        name="tight", travel_time=[[0, 1, 1], [1, 0, 1], [1, 1, 0]], distance=[[0, 1, 1], [1, 0, 1], [1, 1, 0]],
        demand=[2, 2], service_time=[0, 0], unload_time=0, capacity=3, time_limit=10, fleet_size=1,
    )
    (workdir / "tight.json").write_bytes(formats.dump_instance(inst))
    assert main(["solve", "tight.json"]) == EXIT_INFEASIBLE


def test_budget_abort_exit_code(workdir, capsys):
    assert main(["solve", "fixture9.json", "--budget", "-1"]) == EXIT_BUDGET
    assert "budget" in capsys.readouterr().err


def test_stdout_summary_is_deterministic(workdir, capsys):
    main(["solve", "fixture9.json", "--out", "x"])
    first = capsys.readouterr()
    main(["solve", "fixture9.json", "--out", "x"])
    second = capsys.readouterr()
    assert first.out == second.out
    assert "wall time" in first.err and "wall time" not in first.out
