import io
import json
import subprocess
import sys

import pytest

from secpowers.cli import main


def run(*argv, env=None):
    out = io.StringIO()
    if env:
        mp = pytest.MonkeyPatch()
        for k, v in env.items():
            mp.setenv(k, v)
        try:
            code = main(list(argv), out)
        finally:
            mp.undo()
    else:
        code = main(list(argv), out)
    return code, out.getvalue()


def test_dim_certified():
    code, out = run("dim", "--system", "V2h", "--n", "1", "--d", "2", "--k", "4", "--h", "1")
    assert code == 0
    assert json.loads(out)["verdict"] == "Certified-Expected"


def test_dim_closed_form():
    code, out = run("dim", "--system", "AH", "--N", "2", "--k", "4", "--h", "5")
    assert code == 0
    assert json.loads(out)["verdict"] == "Closed-Form"


def test_dim_outside_bound_still_reported():
    code, out = run("dim", "--system", "V2h", "--n", "2", "--d", "3", "--k", "3", "--h", "1")
    rep = json.loads(out)
    assert code == (0 if rep["verdict"] == "Certified-Expected" else 2)
    assert rep["computed_dim"] >= rep["expected_dim"]


def test_dim_inconclusive_exit_code():
    code, out = run("dim", "--system", "V2h", "--n", "1", "--d", "2", "--k", "4", "--h", "2")
    assert code == 2 and json.loads(out)["verdict"] == "Inconclusive-Excess"


@pytest.mark.parametrize("system,extra", [
    ("Lambda", ["--N", "5", "--n", "1", "--k", "3", "--h", "2"]),
    ("Va", ["--n", "1", "--d", "2", "--k", "4", "--a", "3"]),
    ("Pia", ["--n", "2", "--d", "2", "--k", "2", "--a", "2"]),
])
def test_other_systems(system, extra):
    code, out = run("dim", "--system", system, *extra)
    assert code == 0 and "computed_dim" in json.loads(out)


def test_secant_command():
    code, out = run("secant", "--n", "1", "--d", "2", "--k", "2", "--h", "2")
    rep = json.loads(out)
    assert code == 0 and rep["computed_secant_dim"] == 4


def test_toric_svg_and_json():
    code, out = run("toric", "--n", "2", "--d", "3", "--emit", "svg")
    assert code == 0 and out.count("<polygon") == 9
    code, out = run("toric", "--n", "2", "--d", "2", "--validate")
    data = json.loads(out)
    assert code == 0 and all(data["checks"].values())
    assert run("toric", "--n", "3", "--d", "2", "--emit", "svg")[0] == 1


def test_report_rows():
    code, out = run("report", "--n", "2", "--k", "5", "--d", "2..10", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 10
    code, out = run("report", "--n", "2", "--k", "5", "--d", "2..10", "--format", "svg")
    assert out.startswith("<svg")


def test_ledger_and_bounds():
    code, out = run("ledger", "--n", "1", "--d", "2", "--k", "4", "--h", "1")
    assert code == 0 and json.loads(out)["consistent"] is True
    code, out = run("ledger", "--n", "1", "--d", "2", "--k", "5", "--h", "2", "--bruteforce")
    assert code == 2
    code, out = run("bounds", "--n", "2", "--d", "3", "--k", "5")
    assert json.loads(out)["main_bound"] == 5


@pytest.mark.parametrize("argv", [
    ["dim", "--system", "V2h", "--n", "1"],
    ["dim", "--system", "V2h", "--n", "1", "--d", "2", "--k", "4", "--h", "1", "--prime", "100"],
    ["dim", "--system", "V2h", "--n", "1", "--d", "2", "--k", "4", "--h", "1", "--prime", "7"],
    ["dim", "--system", "V2h", "--n", "2", "--d", "3", "--k", "4", "--h", "1", "--size-cap", "10"],
    ["ledger", "--n", "1", "--d", "2", "--k", "3", "--h", "0"],
    ["secant", "--n", "1", "--d", "2", "--k", "2", "--h", "2", "--format", "svg"],
])
def test_errors_exit_one(argv):
    assert run(*argv)[0] == 1


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--sys", "V2h"], io.StringIO())
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nope"], io.StringIO())
    assert exc.value.code == 1


def test_env_overrides():
    _, out = run("dim", "--system", "AH", "--N", "2", "--k", "3", "--h", "1",
                 env={"SECPOWERS_PRIME": "65521", "SECPOWERS_SEED": "17"})
    rep = json.loads(out)
    assert rep["prime"] == 65521 and rep["seed"] == 17
    assert run("dim", "--system", "AH", "--N", "2", "--k", "3", "--h", "1",
               env={"SECPOWERS_SEED": "x"})[0] == 1


def test_identical_invocations_are_byte_identical():
    argv = [sys.executable, "-m", "secpowers", "dim", "--system", "Lambda", "--N", "4", "--n", "1",
            "--k", "3", "--h", "3", "--placement", "random", "--seed", "123", "--format", "csv"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
