"""
Frobenius roots
===============

I^[1/p^e] is the smallest ideal J with I inside J^[p^e].  Every polynomial
splits as sum_a (f_a)^(p^e) x^a and the root is spanned by the pieces f_a.
"""

from fjump import Ideal, PolynomialRing, bracket_power, frobenius_root
from fjump.poly import qth_power_decompose

R = PolynomialRing(2, ["x", "y"])
f = R.parse("x^3*y^5 + x*y")

for a, piece in sorted(qth_power_decompose(f, 1).items()):
    print(f"residue {a}: {piece}")

I = Ideal(R, [f])
root = frobenius_root(I, 1)
print("root:", root)
print("I inside root^[2]?", I <= bracket_power(root, 1))

# roots undo bracket powers on a polynomial ring
J = Ideal(R, [R.parse("x + y^2"), R.parse("x*y")])
print(frobenius_root(bracket_power(J, 2), 2) == J)
