"""Independent ground truth for the test-ideal engine.

* Howald's formula: the multiplier ideal of a monomial ideal a at t is
  spanned by the monomials x^v with v + (1, ..., 1) in the interior of
  t * Newton(a).  On the smooth ambient it equals the test ideal.
* The nu-function nu_f(p^e) = max{r : f^r not in m^[p^e]}, computed by
  plain repeated multiplication.

Neither uses Frobenius roots or the chain.
"""

from fractions import Fraction
from itertools import combinations, product
from math import floor

from .groebner import Ideal
from .ring import as_rational


def _solve(rows, rhs):
    """Exact Gauss-Jordan solve; None if singular."""
    n = len(rows)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


class NewtonPolyhedron:
    """conv(exponents) + R^n_{>=0}, described by weight vectors.

    ``weights`` are the vertices w of Q = {w >= 0 : <w, a> >= 1 for all
    generators a}.  Then u lies in t * Newton exactly when u >= 0 and
    <w, u> >= t for every such w, so the gauge min_w <w, u> decides
    interior membership.
    """

    def __init__(self, exponents):
        self.exponents = [tuple(int(x) for x in a) for a in exponents]
        if not self.exponents:
            raise ValueError("need at least one generator")
        if any(x < 0 for a in self.exponents for x in a):
            raise ValueError("exponent vectors must be nonnegative")
        self.n = len(self.exponents[0])
        self._weights = None

    @property
    def weights(self):
        if self._weights is None:
            self._weights = self._vertices()
        return self._weights

    def _vertices(self):
        n = self.n
        gens = sorted(set(self.exponents))
        if any(not any(a) for a in gens):
            return []   # unit ideal: Q is empty
        found = set()
        for size in range(1, n + 1):
            for support in combinations(range(n), size):
                for tight in combinations(gens, size):
                    sol = _solve([[a[i] for i in support] for a in tight], [1] * size)
                    if sol is None or any(x < 0 for x in sol):
                        continue
                    w = [Fraction(0)] * n
                    for i, x in zip(support, sol):
                        w[i] = x
                    if all(sum(wi * ai for wi, ai in zip(w, a)) >= 1 for a in gens):
                        found.add(tuple(w))
        return sorted(found)

    def gauge(self, u):
        """min_w <w, u>; u is in the interior of t * Newton iff u > 0 and gauge(u) > t."""
        if not self.weights:
            return None
        return min(sum(wi * ui for wi, ui in zip(w, u)) for w in self.weights)

    def box_bounds(self, t):
        """Per-coordinate cap on v for minimal generators of the multiplier ideal at t.

        Once w_i (v_i + 1) > t for every weight w with w_i > 0, raising v_i
        further changes nothing, so minimal generators have v_i <= the first
        such value.  Coordinates no weight sees are capped at 0.
        """
        bounds = []
        for i in range(self.n):
            pos = [w[i] for w in self.weights if w[i] > 0]
            bounds.append(floor(t / min(pos)) if pos else 0)
        return bounds


def _monomial_exponents(I):
    out = []
    for g in I.generators:
        if not g.is_monomial():
            raise ValueError(f"howald oracle needs monomial generators, got {g}")
        out.append(g.lm)
    return out


def howald_multiplier(I, t):
    """Multiplier ideal J(a^t) of a monomial ideal via Howald's formula."""
    t = as_rational(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    ring = I.ring
    N = NewtonPolyhedron(_monomial_exponents(I))
    if t == 0 or not N.weights:
        return Ideal.unit(ring)
    box = N.box_bounds(t)
    _check_box(N, t, box)
    members = [v for v in product(*(range(b + 1) for b in box))
               if N.gauge([x + 1 for x in v]) > t]
    return Ideal(ring, [ring.monomial(v) for v in members]).canonical()


def _check_box(N, t, box):
    # past the box edge in coordinate i every weight that sees i is already above t
    for i, b in enumerate(box):
        if any(w[i] > 0 and w[i] * (b + 1) <= t for w in N.weights):
            raise AssertionError(f"lattice box too small in coordinate {i}")


def howald_jumps(I, lo, hi):
    """Jumping numbers of J(a^t) in (lo, hi]: the gauge values of v + 1 for v in N^n."""
    lo, hi = as_rational(lo), as_rational(hi)
    N = NewtonPolyhedron(_monomial_exponents(I))
    if not N.weights:
        return []
    box = N.box_bounds(hi)
    values = set()
    for v in product(*(range(b + 1) for b in box)):
        g = N.gauge([x + 1 for x in v])
        if lo < g <= hi:
            values.add(g)
    return sorted(values)


def _in_monomial_ideal(f, monos):
    return all(any(all(x >= y for x, y in zip(m, g)) for g in monos) for m in f.terms)


def nu_value(f, e, m):
    """nu_f(p^e): the largest r with f^r outside m^[p^e], m a monomial ideal.

    Ascending search with f^r built by repeated multiplication; membership
    in the monomial ideal m^[p^e] is a per-term divisibility check.
    """
    if not f:
        raise ValueError("nu is undefined for the zero polynomial")
    ring = f.ring
    mono = _monomial_exponents(m)
    if not _in_monomial_ideal(f, mono):
        raise ValueError(f"{f} is not in {m}; its F-threshold at m is undefined")
    q = ring.p**e
    bracket = [tuple(x * q for x in g) for g in mono]
    power = ring.one()
    r = 0
    while True:
        nxt = power * f
        if _in_monomial_ideal(nxt, bracket):
            return r
        power = nxt
        r += 1


def maximal_ideal(ring):
    return Ideal(ring, ring.gens())


def nu_sandwich(nu, p, e):
    """Bounds nu/p^e < fpt <= (nu + 1)/p^e."""
    q = p**e
    return Fraction(nu, q), Fraction(nu + 1, q)
