import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from conftest import golden_text
from scrollrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    text = resources.files("scrollrees").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def test_gen_q_text(capsys):
    code, out, _ = run(capsys, "gen", "-n", "1,2,2,3", "--family", "Q")
    assert code == 0
    assert out == "Q[1,2,3,4] = " + golden_text("q_1223.txt") + "\n"


@pytest.mark.parametrize("argv,name", [
    (["gen", "-n", "2,3", "--emit", "json"], "generators"),
    (["gen", "-n", "2,3", "--emit", "json", "--presentation", "x", "--target", "fiber"], "generators"),
    (["gen", "-n", "1,2,2,3", "--matrix", "M", "--emit", "json"], "matrix"),
    (["gb", "-n", "3,3"], "gb"),
    (["gb", "-n", "2,3", "--target", "fiber", "--modulus", "32003"], "gb"),
    (["complex", "facets", "-n", "2,4"], "facets"),
    (["complex", "facets", "-n", "2,4", "--method", "tree"], "facets"),
    (["complex", "nonfaces", "-n", "1,2,2,3"], "nonfaces"),
    (["hilbert", "M5"], "hilbert"),
    (["order-dump", "-n", "1,2,2,3", "--emit", "json"], "order"),
    (["verify", "--suite", "hilbert-harness"], "report"),
    (["verify", "--suite", "lm", "-n", "2,3", "--timing"], "report"),
    (["verify", "-n", "3,3"], "report"),
])
def test_json_outputs_validate(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(name))


def test_complex_count_and_methods(capsys):
    assert run(capsys, "complex", "facets", "-n", "5", "--emit", "count")[1] == "10\n"
    for method in ("clique", "tree", "formula"):
        assert run(capsys, "complex", "facets", "-n", "2,4", "--method", method, "--emit", "count")[1] == "28\n"


def test_harness_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hilbert-harness")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["counters"]["cases"] == 26


def test_hilbert_file_input(capsys, tmp_path):
    f = tmp_path / "ideal.json"
    f.write_text(json.dumps({"variables": ["u", "v", "w"], "generators": ["u*v", "u*w"]}))
    assert run(capsys, "hilbert", str(f))[1] == "[1, 0, -2, 1]\n"


@pytest.mark.parametrize("argv", [
    [],
    ["gen"],
    ["gen", "-n", "1,0"],
    ["gen", "-n", "a"],
    ["complex", "facets", "-n", "3", "--method", "formula"],
    ["verify", "--suite", "lm"],
    ["hilbert", "L5:99"],
    ["hilbert", "/nonexistent.json"],
    ["gb", "-n", "3", "--budget", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_budget_exhaustion_exits_one(capsys):
    code, _, err = run(capsys, "gb", "-n", "3,3", "--budget", "1")
    assert code == 1 and "budget" in err
    code, _, _ = run(capsys, "complex", "facets", "-n", "5", "--budget", "3")
    assert code == 1


def test_failing_check_exits_one(capsys, tmp_path, monkeypatch):
    from scrollrees import verify as vf

    real = vf.verify_lm_table

    def broken(spec):
        rep = real(spec)
        rep.add("injected", False, "forced failure")
        return rep

    monkeypatch.setattr(vf, "verify_lm_table", broken)
    code, out, _ = run(capsys, "verify", "--suite", "lm", "-n", "3")
    assert code == 1 and json.loads(out)["passed"] is False


def test_out_file(capsys, tmp_path):
    target = tmp_path / "x.txt"
    code, out, _ = run(capsys, "order-dump", "-n", "2,2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "x[1,0]"


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "scrollrees.cli", "verify", "-n", "2,3", "--suite", "all"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["passed"]
