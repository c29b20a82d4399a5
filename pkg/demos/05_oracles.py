"""
Independent checks
==================

Monomial ideals against Howald's formula; thresholds against nu.
"""

from fractions import Fraction

from fjump import Ideal, MixedPair, ParametricPair, PolynomialRing, enumerate_jumps, fpt, tau
from fjump.oracle import howald_jumps, howald_multiplier, maximal_ideal, nu_value

R = PolynomialRing(5, ["x", "y"])
a = Ideal(R, [R.parse("x^2"), R.parse("y^3")])

for t in (Fraction(5, 6), Fraction(7, 6), Fraction(2)):
    print(t, tau(MixedPair(R, [(a, t)])), howald_multiplier(a, t))

print(enumerate_jumps(ParametricPair(MixedPair(R), a), 0, 2).values())
print(howald_jumps(a, 0, 2))

# nu(p^e)/p^e creeps up to the threshold
R = PolynomialRing(7, ["x", "y"])
f = R.parse("x^2 + y^3")
c = fpt(ParametricPair(MixedPair(R), Ideal(R, [f])))
for e in (1, 2, 3):
    nu = nu_value(f, e, maximal_ideal(R))
    print(f"e={e}: {nu}/{7**e} <= {c} <= {nu + 1}/{7**e}")
