from fractions import Fraction

import pytest

from fjump.groebner import Ideal
from fjump.pairs import (DivisorCombination, MixedPair, drop_trivial, pair_from_divisor,
                         skoda_normalize, twist)
from conftest import ring

F = Fraction


def P(R, *factors):
    return MixedPair(R, [(Ideal(R, [R.parse(g) for g in gens.split(";")]), F(s))
                         for gens, s in factors])


def test_pair_from_divisor_appends_components():
    R = ring(3)
    x, y = R.gens()
    delta = DivisorCombination(((x, F(1, 2)), (y, 1)))
    got = pair_from_divisor(delta, P(R, ("x;y", "3/4")))
    assert got == P(R, ("x;y", "3/4"), ("x", "1/2"), ("y", "1"))


def test_empty_divisor_is_identity():
    R = ring(3)
    rest = P(R, ("x;y", "3/4"))
    assert pair_from_divisor(DivisorCombination(), rest) == rest


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divisor_gives_offset_pair_shape(p):
    R = ring(p, "x")
    x = R.var("x")
    got = pair_from_divisor(DivisorCombination(((x, F(1, p)),)), P(R, ("x", "2/3")))
    assert got == P(R, ("x", "2/3"), ("x", F(1, p)))


@pytest.mark.parametrize("factors,prefactor,rest", [
    ([("x", "3/2")], "x", [("x", "1/2")]),
    ([("x", "1/2")], "1", [("x", "1/2")]),
    ([("x", "2"), ("y", "5/4")], "x^2*y", [("y", "1/4")]),
    ([("x;y", "5/2")], "1", [("x;y", "5/2")]),
])
def test_skoda_normalize(factors, prefactor, rest):
    R = ring(5)
    pre, Q = skoda_normalize(P(R, *factors))
    assert pre == R.parse(prefactor)
    assert Q == P(R, *rest)


def test_twist_offset_pair():
    R = ring(5, "x")
    pair = P(R, ("x", "1/5"), ("x", "1/2"))
    delta, rest = twist(pair, 0, "into-divisor")
    assert delta.components == ((R.var("x"), F(1, 5)),)
    assert rest == P(R, ("x", "1/2"))
    assert twist(rest, 0, "into-ideal", delta, position=0) == (DivisorCombination(), pair)


def test_twist_round_trip_cusp():
    R = ring(7)
    pair = P(R, ("x^2 + y^3", "5/6"))
    delta, rest = twist(pair, 0, "into-divisor")
    assert twist(rest, 0, "into-ideal", delta)[1] == pair


def test_twist_errors():
    R = ring(5)
    pair = P(R, ("x;y", "1"))
    with pytest.raises(ValueError):
        twist(pair, 0, "into-divisor")
    with pytest.raises(IndexError):
        twist(pair, 3, "into-divisor")
    with pytest.raises(ValueError):
        twist(pair, 0, "sideways")


def test_pair_validation():
    R = ring(5)
    with pytest.raises(ValueError):
        P(R, ("x", "-1/2"))
    with pytest.raises(ValueError):
        MixedPair(R, [(Ideal(R, []), 1)])


def test_drop_trivial():
    R = ring(5)
    pair = P(R, ("x", "0"), ("x + 1;x", "3"), ("y", "1/2"))
    assert drop_trivial(pair) == P(R, ("y", "1/2"))
