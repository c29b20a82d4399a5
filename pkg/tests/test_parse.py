from fractions import Fraction

import pytest

from fjump.groebner import Ideal
from fjump.jumping import ParametricPair
from fjump.pairs import MixedPair
from fjump.parse import ParseError, parse_ideal, parse_pair, parse_polynomial, parse_range
from conftest import ring


def test_offset_pair():
    R = ring(5, "x")
    pair = parse_pair("x^1/5; x^t", R)
    assert isinstance(pair, ParametricPair)
    assert pair.base == MixedPair(R, [(R.var("x"), Fraction(1, 5))])
    assert pair.moving == Ideal(R, [R.var("x")])


def test_moving_ideal_marker():
    R = ring(2)
    pair = parse_pair("(x, y)^@t", R)
    assert pair.moving == Ideal(R, R.gens()) and not pair.base.factors


def test_fixed_pair():
    R = ring(3)
    pair = parse_pair("(x^2 + y^3)^5/6 ; (x,y)^(1/2)", R)
    assert pair.exponents() == [Fraction(5, 6), Fraction(1, 2)]


@pytest.mark.parametrize("text,message", [
    ("x^-1", "negative exponent"),
    ("x^1/0", "zero denominator"),
    ("2x^1", "juxtaposition"),
    ("z^1", "unknown variable"),
    ("(x, 0)^1", "zero polynomial"),
    ("x^t; y^t", "only one factor"),
    ("x", "needs an exponent"),
    ("(x^1", "unbalanced"),
    ("x $ y^1", "unexpected character"),
])
def test_errors(text, message):
    R = ring(5)
    with pytest.raises(ParseError, match=message):
        parse_pair(text, R)


def test_error_position():
    R = ring(5)
    with pytest.raises(ParseError, match="column 3"):
        parse_polynomial("x*z", R)


def test_coefficients_reduced():
    R = ring(3)
    assert parse_polynomial("4*x - 5", R) == R.parse("x + 1")
    assert parse_polynomial(" x ^ 2 * y ", R) == R.monomial((2, 1))


def test_ideal_forms():
    R = ring(3)
    assert parse_ideal("(x, y)", R) == Ideal(R, R.gens())
    assert parse_ideal("(x + y)*(x - y)", R) == Ideal(R, [R.parse("x^2 - y^2")])


def test_range():
    assert parse_range("0..3") == (0, 3)
    assert parse_range("1/2..5/2") == (Fraction(1, 2), Fraction(5, 2))
    with pytest.raises(ParseError):
        parse_range("0-3")
