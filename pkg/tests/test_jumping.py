from fractions import Fraction

import pytest

from fjump.groebner import Ideal
from fjump.jumping import (ParametricPair, TauEvaluator, default_denominator_bound,
                           enumerate_jumps, fpt, grid_split, identify, is_jump_at,
                           scaling_counterexample_check)
from fjump.pairs import MixedPair
from fjump.testideal import DEFAULT_CONFIG, ChainConfig
from fjump.verify import offset_pair
from conftest import ring

F = Fraction


def moving(p, gens, names="x,y"):
    R = ring(p, names)
    return ParametricPair(MixedPair(R), Ideal(R, [R.parse(g) for g in gens]))


def test_is_jump_at_smooth_divisor():
    pair = moving(3, ["x"], "x")
    assert is_jump_at(pair, 1, F(1, 100))
    assert not is_jump_at(pair, F(1, 2), F(1, 100))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_is_jump_at_offset_pair(p):
    pair = offset_pair(p)
    assert is_jump_at(pair, F(p - 1, p), F(1, 100))
    assert not is_jump_at(pair, p - 1, F(1, 100))


def test_is_jump_at_preconditions():
    with pytest.raises(ValueError):
        is_jump_at(moving(2, ["x"], "x"), 0, F(1, 2))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_offset_pair_jumps(p):
    report = enumerate_jumps(offset_pair(p), 0, 3, 10 * p)
    assert report.values() == [F(k * p - 1, p) for k in (1, 2, 3)]
    assert report.fully_certified()


def test_smooth_divisor_jumps():
    assert enumerate_jumps(moving(5, ["x"], "x"), 0, 3).values() == [1, 2, 3]


@pytest.mark.parametrize("p", [2, 5])
def test_maximal_ideal_jumps(p):
    report = enumerate_jumps(moving(p, ["x", "y"]), 0, 3)
    assert report.values() == [2, 3] and report.fully_certified()


def test_jumps_are_strict_drops():
    report = enumerate_jumps(moving(3, ["x^2", "y^3"]), 0, 2)
    ts = report.values()
    assert ts == sorted(set(ts))
    for j in report.jumps:
        assert j.tau_at <= j.tau_before and j.tau_at != j.tau_before


def test_right_constancy():
    pair = moving(3, ["x^2", "y^3"])
    ev = TauEvaluator(pair)
    ts = enumerate_jumps(pair, 0, 2, evaluator=ev).values()
    for a, b in zip(ts, ts[1:]):
        assert ev(a) == ev(a + (b - a) / 2)


def test_tiny_denominator_bound_leaves_uncertified_bracket():
    report = enumerate_jumps(moving(2, ["x^2", "y^3"]), 0, 1, denominator_bound=2)
    assert not report.fully_certified()
    assert report.uncertified or any(not j.certified for j in report.jumps)


@pytest.mark.parametrize("p,f,want", [(2, "x^2 + y^3", F(1, 2)), (7, "x^2 + y^3", F(5, 6)),
                                      (3, "x", 1), (5, "x*y", 1)])
def test_fpt(p, f, want):
    assert fpt(moving(p, [f])) == want


@pytest.mark.parametrize("p", [2, 3, 5])
def test_scaling_fails_for_offset_pair(p):
    pair = offset_pair(p)
    report = enumerate_jumps(pair, 0, 3)
    rows = scaling_counterexample_check(pair, 1, report)
    assert [r[1] for r in rows] == [k * p - 1 for k in (1, 2, 3)]
    assert not any(r[2] for r in rows)


def test_scaling_holds_for_controls():
    pair = moving(3, ["x"], "x")
    rows = scaling_counterexample_check(pair, 1, enumerate_jumps(pair, 0, 1))
    assert rows == [(1, 3, True)]
    pair = moving(2, ["x", "y"])
    rows = scaling_counterexample_check(pair, 1, enumerate_jumps(pair, 0, 2))
    assert rows == [(2, 4, True)]


def test_grid_split_prefers_p_adic_points():
    m = grid_split(F(0), F(3), 5)
    assert 0 < m < 3 and m.denominator == 1
    m = grid_split(F(4, 5), F(21, 25), 5)
    assert F(4, 5) < m < F(21, 25) and m.denominator == 125


def test_identify_includes_right_end():
    assert identify(F(1, 3), F(1, 2), 2) == F(1, 2)
    assert identify(F(1, 3), F(1, 2), 1) is None


def test_default_bound():
    assert default_denominator_bound(2, ChainConfig(e_cap=4)) == 16 * 15
    assert default_denominator_bound(2, DEFAULT_CONFIG) == 10**6
    assert default_denominator_bound(5, DEFAULT_CONFIG) == 10**6
