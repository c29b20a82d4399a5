"""
Polynomials and ideals over F_p
===============================

Sparse polynomials with exact F_p coefficients, Groebner bases, membership.
"""

from fjump import Ideal, PolynomialRing

# a ring is a prime, variable names and a monomial order
R = PolynomialRing(3, ["x", "y"])
x, y = R.gens()

# characteristic 3: the freshman's dream is an identity
print((x + y)**3)
print((x + 1) * (x + 2))

# parsing needs explicit '*'
f = R.parse("x^2 + y^2")
I = Ideal(R, [f, x * y])
print("reduced basis:", I)
print("x^3 in I?", I.contains(x**3))
print("y in I?", I.contains(y))

# equal ideals have equal reduced bases, however they are presented
print(Ideal(R, [x + y, y]) == Ideal(R, [x, y]))
