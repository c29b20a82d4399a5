"""Prime-field scalars and exact rational helpers.

Exponents throughout the package are :class:`fractions.Fraction` values;
field elements are plain ``int`` residues in ``range(p)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

MAX_CHARACTERISTIC = 100


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeChar:
    """The characteristic ``p`` of the ground field, checked by trial division."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"characteristic must be a prime, got {self.p!r}")
        if self.p > MAX_CHARACTERISTIC:
            raise ValueError(
                f"characteristic {self.p} exceeds the supported bound {MAX_CHARACTERISTIC}")

    def __int__(self):
        return self.p


def fp_inv(a, p):
    """Inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(a, p - 2, p)


def as_rational(value):
    """Coerce ints, Fractions and ``"a/b"`` strings to Fraction; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating point exponents are not accepted; use Fraction or 'a/b'")
    return Fraction(value)


def rat_ceil_scale(t, q):
    """Exact ``ceil(t * q)`` for a nonnegative rational ``t``."""
    t = as_rational(t)
    if t < 0:
        raise ValueError(f"exponent must be nonnegative, got {t}")
    if q < 1:
        raise ValueError(f"scale must be positive, got {q}")
    return -((-t.numerator * q) // t.denominator)


def p_adic_depth(t, p):
    """Exponent of ``p`` in the reduced denominator of ``t``."""
    den = Fraction(t).denominator
    k = 0
    while den % p == 0:
        den //= p
        k += 1
    return k


def simplest_rational_in(lo, hi, max_denominator):
    """Rational of smallest denominator in the open interval ``(lo, hi)``.

    Ties in the denominator go to the smallest numerator.  The search is a
    Stern-Brocot descent with runs in one direction taken in a single step,
    so it costs O(log max_denominator) iterations.  Returns ``None`` when the
    simplest rational has denominator above ``max_denominator``.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if max_denominator < 1:
        raise ValueError("max_denominator must be positive")
    n = floor(lo)
    lo0, hi0 = lo - n, hi - n
    if hi0 > 1:
        return Fraction(n + 1)
    # left = a/b, right = c/d bracket the target; both start at the unit interval ends
    a, b, c, d = 0, 1, 1, 1
    while True:
        if b + d > max_denominator:
            return None
        m = Fraction(a + c, b + d)
        if m <= lo0:
            k = floor((lo0 * b - a) / (c - lo0 * d))
            a, b = a + k * c, b + k * d
        elif m >= hi0:
            k = floor((c - hi0 * d) / (hi0 * b - a))
            c, d = c + k * a, d + k * b
        else:
            return n + m
