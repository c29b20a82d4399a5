"""Mixed pairs f_1^{b_1} ... a^t and principal divisor combinations.

The two rewriting moves live here: ``twist`` shuttles a principal factor
between the divisor part and the ideal part, and ``skoda_normalize`` pulls
integer powers of principal factors out in front of the test ideal.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .groebner import Ideal
from .poly import Polynomial
from .ring import as_rational


@dataclass(frozen=True)
class DivisorCombination:
    """Effective divisor ``sum c_i div(g_i)`` given by principal components."""

    components: tuple = ()

    def __post_init__(self):
        comps = []
        for g, c in self.components:
            c = as_rational(c)
            if not isinstance(g, Polynomial) or not g:
                raise ValueError("divisor components need a nonzero polynomial")
            if c < 0:
                raise ValueError(f"divisor coefficient must be nonnegative, got {c}")
            comps.append((g, c))
        object.__setattr__(self, "components", tuple(comps))

    def __len__(self):
        return len(self.components)

    def __add__(self, other):
        return DivisorCombination(self.components + other.components)

    def __str__(self):
        if not self.components:
            return "0"
        return " + ".join(f"{c}*div({g})" for g, c in self.components)


class MixedPair:
    """Formal product of ideals with nonnegative rational exponents.

    ``factors`` is a tuple of ``(Ideal, Fraction)``.  The empty product is
    the trivial pair, whose test ideal is the whole ring.
    """

    def __init__(self, ring, factors=()):
        self.ring = ring
        out = []
        for I, s in factors:
            if isinstance(I, Polynomial):
                I = Ideal(ring, [I])
            if I.ring != ring:
                raise ValueError(f"ring mismatch: {I.ring} vs {ring}")
            if I.is_zero():
                raise ValueError("pair factors must be nonzero ideals")
            s = as_rational(s)
            if s < 0:
                raise ValueError(f"negative exponent {s}")
            out.append((I, s))
        self.factors = tuple(out)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __eq__(self, other):
        if not isinstance(other, MixedPair):
            return NotImplemented
        return (self.ring == other.ring and len(self) == len(other)
                and all(I == J and s == t for (I, s), (J, t) in zip(self, other)))

    def __hash__(self):
        return hash((self.ring, self.factors))

    def with_factor(self, I, s):
        return MixedPair(self.ring, self.factors + ((I, s),))

    def replace_exponent(self, i, s):
        f = list(self.factors)
        f[i] = (f[i][0], s)
        return MixedPair(self.ring, f)

    def without(self, i):
        return MixedPair(self.ring, self.factors[:i] + self.factors[i + 1:])

    def exponents(self):
        return [s for _, s in self.factors]

    def is_principal(self):
        return all(I.principal_generator() is not None for I, _ in self.factors)

    def __str__(self):
        if not self.factors:
            return "R"
        parts = []
        for I, s in self.factors:
            g = I.principal_generator() if len(I.generators) == 1 else None
            body = f"({g})" if g is not None else "(" + ", ".join(map(str, I.generators)) + ")"
            parts.append(f"{body}^{s}")
        return "; ".join(parts)

    __repr__ = __str__


def pair_from_divisor(delta, rest):
    """Fold each divisor component ``c div(g)`` into an ideal factor ``(g)^c``."""
    comps = [(Ideal(rest.ring, [g]), c) for g, c in delta.components]
    return MixedPair(rest.ring, rest.factors + tuple(comps))


def twist(pair, i, direction, delta=None, position=None):
    """Move one principal factor between the ideal part and the divisor part.

    ``into-divisor`` removes factor ``i`` of ``pair`` and appends it to
    ``delta``; ``into-ideal`` removes component ``i`` of ``delta`` and
    inserts it into ``pair`` at ``position`` (default: the end).  Returns
    ``(delta, pair)``.
    """
    delta = delta if delta is not None else DivisorCombination()
    if direction == "into-divisor":
        if not 0 <= i < len(pair):
            raise IndexError(f"factor index {i} out of range for {len(pair)} factors")
        I, s = pair.factors[i]
        g = I.principal_generator()
        if g is None:
            raise ValueError(f"factor {i} is not principal; it cannot become a divisor")
        return delta + DivisorCombination(((g, s),)), pair.without(i)
    if direction == "into-ideal":
        if not 0 <= i < len(delta):
            raise IndexError(f"component index {i} out of range for {len(delta)} components")
        g, c = delta.components[i]
        rest = DivisorCombination(delta.components[:i] + delta.components[i + 1:])
        factors = list(pair.factors)
        factors.insert(len(factors) if position is None else position, (Ideal(pair.ring, [g]), c))
        return rest, MixedPair(pair.ring, factors)
    raise ValueError(f"unknown direction {direction!r}")


def skoda_normalize(pair):
    """Split ``pair`` into ``(prefactor, reduced)`` with tau(pair) = prefactor * tau(reduced).

    Every principal factor with exponent ``s >= 1`` contributes
    ``g^floor(s)`` to the prefactor and keeps exponent ``s - floor(s)``;
    factors left at exponent 0 are dropped.  Non-principal factors are left
    alone whatever their exponent.
    """
    ring = pair.ring
    prefactor = ring.one()
    kept = []
    for I, s in pair.factors:
        g = I.principal_generator() if s >= 1 else None
        if g is None:
            kept.append((I, s))
            continue
        n = floor(s)
        prefactor = prefactor * g**n
        if s - n:
            kept.append((I, s - n))
    return prefactor, MixedPair(ring, kept)


def drop_trivial(pair):
    """Remove factors that cannot affect tau: exponent 0 or unit ideal."""
    return MixedPair(pair.ring, [(I, s) for I, s in pair.factors
                                 if s != 0 and not I.is_unit()])


def total_exponent_shift(pair, i, amount):
    """Pair with ``amount`` added to the exponent of factor ``i``."""
    I, s = pair.factors[i]
    return pair.replace_exponent(i, s + Fraction(amount))
