"""
Test ideals of mixed pairs
==========================

tau(f_1^s_1 ... a^t) for rational exponents, computed three ways.
"""

from fractions import Fraction

from fjump import (DivisorCombination, Ideal, MixedPair, PolynomialRing, skoda_normalize, tau,
                   tau_details, tau_remark23, tau_with_divisor)

R = PolynomialRing(7, ["x", "y"])
cusp = R.parse("x^2 + y^3")

# the cusp at p = 7: trivial just below 5/6, the maximal ideal at 5/6
for s in (Fraction(4, 5), Fraction(5, 6)):
    print(f"tau(cusp^{s}) =", tau(MixedPair(R, [(cusp, s)])))

# integer parts of principal exponents come out as a factor
pair = MixedPair(R, [(R.parse("x"), Fraction(5, 2)), (cusp, Fraction(1, 3))])
pre, rest = skoda_normalize(pair)
print(tau(pair), "=", pre, "*", tau(rest))

# the same ideal from a test element and a sum of Cartier-map images
m2 = MixedPair(R, [(Ideal(R, R.gens()), 2)])
info = tau_details(m2)
print(info.ideal, tau_remark23(m2, R.parse("x"), info.depth + 2))

# with the cusp kept as a divisor instead of an ideal factor
delta = DivisorCombination(((cusp, Fraction(5, 6)),))
print(tau_with_divisor(delta, MixedPair(R), R.parse("x"), 4))
