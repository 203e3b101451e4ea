import json
import subprocess
import sys

import pytest

from plancherel.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_avg_fmu_range(capsys):
    code, out, _ = run(["avg", "--obs", "fmu:1", "--theta", "1", "--n", "0..6"], capsys)
    assert code == 0
    data = json.loads(out)
    assert [v for _, v in data["averages"]] == ["0", "1", "2", "3", "4", "5", "6"]
    assert data["degree_bound"] == 1


def test_avg_examples_csv(capsys):
    code, out, _ = run(["avg", "--obs", "content:p(2)", "--theta", "1", "--n", "2", "--format", "csv"], capsys)
    assert code == 0 and out == "n,average\n2,1\n"
    code, out, _ = run(["avg", "--obs", "pstar:1", "--theta", "1", "--n", "5", "--format", "csv"], capsys)
    assert out == "n,average\n5,5\n"


def test_avg_jack_rationals(capsys):
    code, out, _ = run(["avg", "--obs", "h:2", "--theta", "2/3", "--n", "1", "--format", "csv"], capsys)
    assert code == 0 and out == "n,average\n1,2/3\n"


def test_avg_poly_and_emit_table(capsys, tmp_path):
    table = tmp_path / "series.csv"
    code, out, _ = run(["avg", "--obs", "hrho:2,2", "--theta", "1/2", "--poly", "--emit-table", str(table)], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] is True and report["degree_bound"] == 2
    lines = table.read_text().splitlines()
    assert lines[0] == "n,average" and len(lines) == 1 + len(report["values"])


def test_avg_poly_failure_exit_code(capsys, monkeypatch):
    import plancherel.observables as obs_mod

    monkeypatch.setattr(obs_mod.FMu, "degree_bound", property(lambda self: 0))
    code, out, _ = run(["avg", "--obs", "fmu:1", "--poly"], capsys)
    assert code == 1 and json.loads(out)["verdict"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["avg", "--obs", "nonsense:1", "--n", "2"],
        ["avg", "--obs", "pstar:1", "--n", "x"],
        ["avg", "--obs", "pstar:1", "--n", "2", "--theta", "0.5"],
        ["avg", "--obs", "pstar:1", "--n", "2", "--theta", "-1"],
        ["avg", "--obs", "pstar:1"],
        ["show", "coords", "--lambda", "1,2"],
        ["show", "coords"],
        ["sample", "--n", "3", "--trajectories", "0"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_parse_error_names_token(capsys):
    code, _, err = run(["avg", "--obs", "pstar:1*wat:2", "--n", "2"], capsys)
    assert code == 2 and "wat:2" in err


def test_bound_errors(capsys):
    assert run(["avg", "--obs", "pstar:1", "--n", "31"], capsys)[0] == 3
    assert run(["sample", "--n", "40"], capsys)[0] == 3
    assert run(["show", "jack", "--n", "13", "--theta", "2"], capsys)[0] == 3


def test_verify_examples(capsys):
    code, out, _ = run(["verify", "stanley"], capsys)
    assert code == 0 and out.splitlines()[-1].startswith("stanley: PASS")
    code, out, _ = run(["verify", "growth-vs-jack", "--theta", "2", "--n-max", "6"], capsys)
    assert code == 0
    code, out, _ = run(["verify", "del-identity", "--theta", "1", "--n-max", "5"], capsys)
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("suite", ["jack-closed-form", "kerov-identities", "duality", "polynomiality"])
def test_verify_other_suites(suite, capsys):
    code, out, _ = run(["verify", suite, "--theta", "1/2"], capsys)
    assert code == 0, out


def test_verify_reports_failure(capsys, monkeypatch):
    import plancherel.cli as cli
    from plancherel.suites import Case

    def broken(thetas=None, n_max=None):
        yield Case("good", True)
        yield Case("bad", False, "lhs 1 rhs 2")

    monkeypatch.setitem(cli.SUITES, "stanley", broken)
    code, out, _ = run(["verify", "stanley"], capsys)
    assert code == 1
    assert "first counterexample: bad: lhs 1 rhs 2" in out


def test_sample_examples(capsys):
    code, out, _ = run(["sample", "--n", "1", "--trajectories", "5", "--seed", "7"], capsys)
    assert code == 0 and json.loads(out)["samples"] == ["1"] * 5
    code, out, _ = run(["sample", "--n", "0"], capsys)
    data = json.loads(out)
    assert data["samples"] == [""] and data["frequencies"] == [["", "1", "1"]]


def test_sample_paths(capsys):
    code, out, _ = run(["sample", "--n", "3", "--trajectories", "2", "--theta", "2", "--paths"], capsys)
    data = json.loads(out)
    assert all(len(p) == 4 and p[0] == "" for p in data["paths"])


def test_show_examples(capsys):
    code, out, _ = run(["show", "coords", "--lambda", "3,3,1", "--theta", "1/2"], capsys)
    data = json.loads(out)
    assert code == 0 and data["X"] == ["3", "0", "-3/2"] and data["Y"] == ["2", "-1/2"]
    code, out, _ = run(["show", "kernel", "--lambda", "", "--theta", "1"], capsys)
    assert json.loads(out)["targets"] == [["1", "1"]]
    code, out, _ = run(["show", "measure", "--n", "2", "--theta", "3"], capsys)
    assert json.loads(out)["weights"] == [["2", "3/4"], ["1,1", "1/4"]]
    code, out, _ = run(["show", "measure", "--n", "2", "--theta", "3", "--format", "csv"], capsys)
    assert out == "n,theta,partition,weight\n2,3,2,3/4\n2,3,\"1,1\",1/4\n"


def test_show_jack(capsys):
    code, out, _ = run(["show", "jack", "--lambda", "2", "--theta", "2"], capsys)
    entry = json.loads(out)["jack"][0]
    assert entry["P"]["terms"] == [["2", "1"], ["1,1", "4/3"]]
    assert entry["dim"] == "1" and entry["dim_prime"] == "1/3"


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(["show", "measure", "--n", "3", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 3


def test_byte_identical_output():
    argv = [sys.executable, "-m", "plancherel", "sample", "--n", "6", "--theta", "2", "--trajectories", "200",
            "--seed", "9", "--format", "csv", "--paths"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
