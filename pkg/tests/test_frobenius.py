import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fjump.frobenius import (CartierMap, cartier_in_subsheaf, frobenius_root,
                             frobenius_root_of_product)
from fjump.groebner import Ideal, bracket_power, ideal_power, ideal_product
from fjump.pairs import DivisorCombination
from fjump.verify import random_poly
from conftest import ring


def I(R, *gens):
    return Ideal(R, [R.parse(g) for g in gens])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_root_of_pth_power(p):
    R = ring(p, "x")
    assert frobenius_root(I(R, f"x^{p}"), 1) == I(R, "x")
    assert frobenius_root(I(R, f"x^{p - 1}"), 1).is_unit()


def test_root_of_frobenius_image():
    R = ring(2)
    assert frobenius_root(I(R, "(x + y)^2"), 1) == I(R, "x + y")


def test_root_depth_two():
    R = ring(2)
    assert frobenius_root(I(R, "x^3*y^5"), 2) == I(R, "y")


def test_root_depth_must_be_positive():
    R = ring(2)
    with pytest.raises(ValueError):
        frobenius_root(I(R, "x"), 0)


def test_cartier_map_trace():
    R = ring(3, "x")
    phi = CartierMap(1, R.one())
    assert phi(R.parse("x^2")) == R.one()
    assert phi(R.parse("x^5 + x")) == R.parse("x")
    assert phi(R.parse("x^3")) == R.zero()


@pytest.mark.parametrize("p,e,comps,g,inside", [
    (2, 1, [("x", Fraction(1, 2))], "x", True),
    (2, 1, [("x", Fraction(1, 2))], "1", False),
    (3, 2, [("x*y", Fraction(1, 4))], "x^2*y^2", True),
    (3, 2, [("x*y", Fraction(1, 4))], "x*y", False),
])
def test_cartier_in_subsheaf(p, e, comps, g, inside):
    R = ring(p)
    delta = DivisorCombination(tuple((R.parse(h), c) for h, c in comps))
    assert cartier_in_subsheaf(CartierMap(e, R.parse(g)), delta) is inside


def test_negative_divisor_rejected():
    R = ring(2)
    with pytest.raises(ValueError):
        DivisorCombination(((R.parse("x"), Fraction(-1, 2)),))


def _random_ideal(rng, R, k=2):
    return Ideal(R, [random_poly(rng, R, 3, 3) for _ in range(rng.randint(1, k))])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_root_identities(seed, e):
    rng = random.Random(seed)
    R = ring(rng.choice([2, 3, 5]))
    A = _random_ideal(rng, R)
    B = A + _random_ideal(rng, R, 1)
    root = frobenius_root(A, e)
    assert frobenius_root(bracket_power(A, e), e) == A
    assert A <= bracket_power(root, e)
    assert root <= frobenius_root(B, e)
    assert frobenius_root(frobenius_root(A, 1), e) == frobenius_root(A, e + 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_root_is_minimal_for_principal(seed):
    rng = random.Random(seed)
    R = ring(rng.choice([2, 3]))
    f = random_poly(rng, R, 4, 3)
    root = frobenius_root(Ideal(R, [f]), 1)
    gens = list(root.gb)
    for i in range(len(gens)):
        smaller = Ideal(R, gens[:i] + gens[i + 1:])
        if smaller == root:
            continue
        assert not Ideal(R, [f]) <= bracket_power(smaller, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_kernel_matches_direct_power(seed, e):
    rng = random.Random(seed)
    R = ring(rng.choice([2, 3]))
    factors = []
    for _ in range(rng.randint(1, 2)):
        J = Ideal(R, [random_poly(rng, R, 2, 2) for _ in range(rng.randint(1, 2))])
        factors.append((J, rng.randint(0, 6)))
    start = _random_ideal(rng, R, 1) if rng.random() < 0.5 else None
    direct = start if start is not None else Ideal.unit(R)
    for J, n in factors:
        direct = ideal_product(direct, ideal_power(J, n))
    assert frobenius_root_of_product(factors, e, start=start) == frobenius_root(direct, e)
