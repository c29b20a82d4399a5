"""
F-jumping numbers
=================

Bisection over t for x^(1/p) * x^t.  The jumps are (kp - 1)/p, and
multiplying a jump by p does not give another one.
"""

from fractions import Fraction

from fjump import (Ideal, MixedPair, ParametricPair, PolynomialRing, enumerate_jumps, fpt,
                   scaling_counterexample_check)

for p in (2, 3, 5):
    R = PolynomialRing(p, ["x"])
    x = R.var("x")
    pair = ParametricPair(MixedPair(R, [(x, Fraction(1, p))]), Ideal(R, [x]))
    report = enumerate_jumps(pair, 0, 3)
    print(f"p={p}:", ", ".join(str(t) for t in report.values()),
          "certified" if report.fully_certified() else "NOT certified")
    for t0, scaled, is_jump in scaling_counterexample_check(pair, 1, report):
        print(f"    {t0} -> {scaled}: {'jump' if is_jump else 'no jump'}")

# F-pure thresholds of the cusp depend on p
for p in (2, 3, 5, 7, 11):
    R = PolynomialRing(p, ["x", "y"])
    cusp = ParametricPair(MixedPair(R), Ideal(R, [R.parse("x^2 + y^3")]))
    print(f"fpt(x^2 + y^3) at p={p}:", fpt(cusp))
