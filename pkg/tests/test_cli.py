from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from bernoulli_euler.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_numbers_text_table(capsys):
    code, out, _ = run(capsys, "numbers", "bernoulli", "6")
    assert code == 0
    assert "\n6  1/42\n" in out


def test_numbers_json_cross_check(capsys):
    code, out, _ = run(capsys, "numbers", "bernoulli", "60", "--cross-check", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "v1"
    assert data["cross_check"]["mismatches"] == 0
    assert data["rows"][12]["value"] == "-691/2730"


def test_numbers_euler_csv(capsys):
    code, out, _ = run(capsys, "numbers", "euler", "6", "--format", "csv", "--cross-check")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "value"]
    assert rows[-1] == ["6", "-61"]


def test_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "eval", "coth", "2", "--order", "3", "--format", "json")
    _, b, _ = run(capsys, "eval", "coth", "2", "--order", "3", "--format", "json")
    assert a == b
    data = json.loads(a)
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == a
    assert data["precision_bits"] == 256 and data["tolerance"] == 1e-12


@pytest.mark.parametrize("fn", ["eta", "sech", "coth", "binet"])
def test_eval_reports_consistent_fields(capsys, fn):
    code, out, _ = run(capsys, "eval", fn, "1.5", "--order", "2", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert abs(float(d["residual"])) <= float(d["tail_bound"]) + 1e-60
    assert float(d["enclosure_lo"]) <= float(d["direct"]) <= float(d["enclosure_hi"])


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "theta", "--grid", "0.5,1,4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["status"] == "pass" and d["failures"] == [] and d["total"] > 0


def test_verify_conjecture_is_labelled(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--grid", "1,2")
    assert code == 0
    assert "CONJECTURAL" in out


def test_quad_json(capsys):
    code, out, _ = run(capsys, "quad", "lnpi3", "--tol", "1e-20", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["which"] == "ln_pi_over_3"
    assert float(d["abs_error"]) <= 1e-20


@pytest.mark.parametrize(
    "argv",
    [
        ["numbers", "bernoulli", "2001"],
        ["numbers", "bernoulli", "-1"],
        ["eval", "eta", "1", "--order", "0"],
        ["eval", "eta", "-1"],
        ["eval", "eta", "abc"],
        ["eval", "tan", "1"],
        ["verify", "all", "--grid", "3,2"],
        ["numbers", "bernoulli", "5", "--precision", "10"],
        ["quad", "ln4pi", "--tol", "-1"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_numerical_error_exit_3_with_hint(capsys):
    code, out, err = run(capsys, "quad", "ln4pi", "--tol", "1e-40")
    assert code == 3
    assert "hint" in err and out == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bernoulli_euler", "numbers", "euler", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].split() == ["4", "5"]
