import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from fjump.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_jumps_text():
    code, out, _ = run("--char", "5", "--vars", "x", "jumps", "--range", "0..3", "x^1/5; x^t")
    assert code == 0 and out.strip() == "4/5, 9/5, 14/5"


def test_jumps_json():
    code, out, _ = run("--json", "--char", "5", "--vars", "x", "jumps", "--range", "0..3",
                       "x^1/5; x^t")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"char", "vars", "command", "result"}
    assert doc["char"] == 5 and doc["vars"] == ["x"] and doc["command"] == "jumps"
    jumps = doc["result"]["jumps"]
    assert [j["t"] for j in jumps] == ["4/5", "9/5", "14/5"]
    assert all(j["certified"] for j in jumps)
    ts = [Fraction(j["t"]) for j in jumps]
    assert ts == sorted(set(ts))


def test_flags_after_subcommand():
    code, out, _ = run("froot", "--e", "1", "(x^2)", "--char", "2", "--vars", "x")
    assert code == 0 and out.strip() == "(x)"


def test_gb_and_tau_json():
    code, out, _ = run("--json", "--char", "5", "--vars", "x,y", "gb", "(x^2 + y^2, x*y)")
    assert json.loads(out)["result"]["basis"] == sorted(["x^2 + y^2", "x*y", "y^3"])
    code, out, _ = run("--json", "--char", "3", "--vars", "x,y", "tau", "(x,y)^2")
    assert json.loads(out)["result"]["ideal"] == ["x", "y"]


def test_fpt_and_scaling():
    assert run("--char", "7", "--vars", "x,y", "fpt", "(x^2 + y^3)^t")[1].strip() == "5/6"
    code, out, _ = run("--json", "--char", "3", "--vars", "x", "scaling-check", "--e", "1",
                       "x^1/3; x^t")
    rows = json.loads(out)["result"]["rows"]
    assert [r["scaled"] for r in rows] == ["2", "5", "8"]
    assert not any(r["is_jump"] for r in rows)


@pytest.mark.parametrize("argv", [
    ["--char", "5", "--vars", "x", "tau", "x^-1"],
    ["--char", "4", "--vars", "x", "tau", "x^1"],
    ["tau", "x^1"],
    ["--char", "5", "--vars", "x", "frobnicate"],
    ["--char", "5", "--vars", "x", "jumps", "x^t"],
    ["--char", "5", "--vars", "x", "tau", "x^t"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_strict_uncertified_exit_1():
    code, _, _ = run("--char", "2", "--vars", "x,y", "jumps", "--range", "0..1",
                     "--denom-bound", "2", "--strict", "(x^2, y^3)^t")
    assert code == 1


def test_non_stabilization_exit_1():
    code, _, err = run("--char", "2", "--vars", "x,y", "--e-cap", "2", "--confirm-steps", "5",
                       "tau", "(x, y^3)^1/3; (x^2, y)^5/7")
    assert code == 1 and "did not stabilize" in err


def test_verify_is_reproducible():
    a = run("--json", "verify", "--suite", "skoda", "--suite", "froot", "--seed", "7")
    b = run("--json", "verify", "--suite", "skoda", "--suite", "froot", "--seed", "7")
    assert a == b and a[0] == 0
    suites = json.loads(a[1])["result"]["suites"]
    assert [s["name"] for s in suites] == ["skoda", "froot"]
    assert all(s["failed"] == 0 for s in suites)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fjump", "--char", "2", "--vars", "x",
                           "froot", "--e", "1", "(x^2)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(x)"
