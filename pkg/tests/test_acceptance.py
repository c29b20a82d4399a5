"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line."""

import io
import json
import random
import time
from fractions import Fraction

import pytest

from fjump.cli import main
from fjump.groebner import Ideal
from fjump.jumping import ParametricPair, enumerate_jumps, scaling_counterexample_check
from fjump.pairs import MixedPair
from fjump.poly import PolynomialRing
from fjump.verify import (MONOMIAL_CASES, cusp_suite, froot_suite, oracle_suite, remark23_suite,
                          offset_pair, skoda_suite, twist_suite)

SEED = 7


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {title}"
                  + (f" ({detail})" if detail else ""))
        return ok
    return emit


def cli_json(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(["--json", *argv], out=out, err=err)
    return code, json.loads(out.getvalue()) if out.getvalue() else None


@pytest.mark.parametrize("p", [2, 3, 5])
def test_c1_offset_pair_jumps(p, report):
    start = time.perf_counter()
    code, doc = cli_json("--char", str(p), "--vars", "x", "jumps", "--range", "0..3",
                         f"x^1/{p}; x^t")
    elapsed = time.perf_counter() - start
    got = [Fraction(j["t"]) for j in doc["result"]["jumps"]]
    want = [Fraction(k * p - 1, p) for k in (1, 2, 3)]
    ok = (code == 0 and got == want and all(j["certified"] for j in doc["result"]["jumps"])
          and elapsed < 30)
    assert report(1, f"offset-pair jumps at p={p}", ok,
                  f"{', '.join(map(str, got))} in {elapsed:.2f}s")


@pytest.mark.parametrize("p", [2, 3, 5])
def test_c2_scaling_counterexample(p, report):
    code, doc = cli_json("--char", str(p), "--vars", "x", "scaling-check", "--e", "1",
                         "--range", "0..3", f"x^1/{p}; x^t")
    rows = doc["result"]["rows"]
    _, ctrl = cli_json("--char", str(p), "--vars", "x", "scaling-check", "--e", "1",
                       "--range", "0..1", "x^t")
    crow = ctrl["result"]["rows"]
    ok = (code == 0 and len(rows) == 3 and not any(r["is_jump"] for r in rows)
          and crow == [{"t": "1", "scaled": str(p), "is_jump": True}])
    assert report(2, f"scaling rule fails for offset pair, holds for x^t, p={p}", ok,
                  f"scaled {[r['scaled'] for r in rows]}, control {crow}")


def test_c3_skoda(report):
    res = skoda_suite(random.Random(SEED), 50)
    assert report(3, "Skoda suite", res.passed == 50 and res.ok, res.summary())


def test_c4_twist(report):
    res = twist_suite(random.Random(SEED), 50)
    assert report(4, "twist suite", res.passed == 50 and res.ok, res.summary())


def test_c5_test_element_sum(report):
    res = remark23_suite(random.Random(SEED), 25)
    assert report(5, "test-element sum reproduces tau", res.passed == 25 and res.ok,
                  res.summary())


def test_c6_monomial_oracle(report):
    res = oracle_suite()
    pairs = 3 * len(MONOMIAL_CASES)
    R = PolynomialRing(2, ["x", "y"])
    mx = enumerate_jumps(ParametricPair(MixedPair(R), Ideal(R, R.gens())), 0, 3)
    ok = res.ok and pairs >= 20 and mx.values() == [2, 3]
    assert report(6, "monomial pairs against Howald", ok,
                  f"{pairs} pairs, {res.summary()}, (x,y)^t jumps {mx.values()}")


def test_c7_cusp_thresholds(report):
    res = cusp_suite(e_max=4, strict_upper=True)
    assert report(7, "cusp fpt inside nu/q <= fpt < (nu+1)/q for e <= 4", res.ok,
                  "; ".join(res.failures) or res.summary())


def test_c8_frobenius_roots(report):
    res = froot_suite(random.Random(SEED), 100)
    assert report(8, "Frobenius-root identities", res.passed == 100 and res.ok, res.summary())


def _discrete(rep):
    ts = rep.values()
    return rep.fully_certified() and not rep.uncertified and all(
        a < b for a, b in zip(ts, ts[1:]))


def test_c9_discreteness(report):
    reports = [enumerate_jumps(offset_pair(p), 0, 3) for p in (2, 3, 5)]
    for p in (2, 3, 5):
        for names, gens, _, hi in MONOMIAL_CASES:
            R = PolynomialRing(p, names)
            a = Ideal(R, [R.parse(g) for g in gens])
            reports.append(enumerate_jumps(ParametricPair(MixedPair(R), a), 0, hi))
    bad = [r.interval for r in reports if not _discrete(r)]
    assert report(9, "finite, increasing, fully certified enumerations", not bad,
                  f"{len(reports)} enumerations, {len(bad)} bad")
