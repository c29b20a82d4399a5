"""Sparse multivariate polynomials over F_p.

A :class:`PolynomialRing` fixes the characteristic, the variable names and
the monomial order.  A :class:`Polynomial` maps exponent tuples to nonzero
residues mod p and is treated as immutable.
"""

from functools import cached_property

from .ring import PrimeChar, fp_inv

MAX_EXPONENT = 2**63 - 1

ORDERS = ("grevlex", "lex")


def _grevlex_key(m):
    return (sum(m), tuple(-x for x in reversed(m)))


def _lex_key(m):
    return m


# order-reversing flat keys, for min-heaps
def _grevlex_heap_key(m):
    return (-sum(m),) + tuple(reversed(m))


def _lex_heap_key(m):
    return tuple(-x for x in m)


class PolynomialRing:
    """F_p[x_1, ..., x_n] with a fixed monomial order."""

    def __init__(self, p, variables, order="grevlex"):
        self.char = p if isinstance(p, PrimeChar) else PrimeChar(p)
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",")]
        variables = tuple(variables)
        if not variables or any(not v for v in variables):
            raise ValueError("variable names must be nonempty")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")
        self.variables = variables
        self.order = order
        if order == "grevlex":
            self.key, self.heap_key = _grevlex_key, _grevlex_heap_key
        else:
            self.key, self.heap_key = _lex_key, _lex_heap_key

    @property
    def p(self):
        return self.char.p

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.p == other.p
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.p, self.variables, self.order))

    def __repr__(self):
        return f"PolynomialRing({self.p}, {list(self.variables)}, {self.order!r})"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.nvars: c})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def var(self, name):
        i = self.variables.index(name)
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): 1})

    def monomial(self, exponents, coeff=1):
        return Polynomial(self, {tuple(exponents): coeff})

    def parse(self, text):
        from .parse import parse_polynomial
        return parse_polynomial(text, self)

    def __call__(self, text):
        return self.parse(text)


class Polynomial:
    def __init__(self, ring, terms, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
            return
        p = ring.p
        n = ring.nvars
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if any(e > MAX_EXPONENT for e in m):
                raise OverflowError(f"exponent in {m} exceeds 2^63 - 1")
            c %= p
            if c:
                c = (clean.get(m, 0) + c) % p
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self.terms = clean

    # -- basic structure -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self):
        return len(self.terms) == 1

    @cached_property
    def lm(self):
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda mc: self.ring.key(mc[0]), reverse=True)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def monic(self):
        if not self.terms:
            return self
        inv = fp_inv(self.lc, self.ring.p)
        p = self.ring.p
        return Polynomial(self.ring, {m: c * inv % p for m, c in self.terms.items()}, _clean=True)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            c = (out.get(m, 0) + c) % p
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        p = self.ring.p
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = (get(m, 0) + ca * cb) % p
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def mul_term(self, mono, coeff=1):
        """Multiply by ``coeff * x^mono``."""
        p = self.ring.p
        coeff %= p
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): c * coeff % p for m, c in self.terms.items()},
            _clean=True)

    def frobenius(self, e=1):
        """Image under x -> x^(p^e).  Coefficients are fixed since c^p = c in F_p."""
        q = self.ring.p ** e
        return Polynomial(self.ring, {tuple(x * q for x in m): c for m, c in self.terms.items()},
                          _clean=True)

    def __pow__(self, n):
        return poly_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def poly_pow(f, n):
    """``f**n`` by square-and-multiply, with p-th powers taken as Frobenius images."""
    if n < 0:
        raise ValueError("negative power")
    ring = f.ring
    p = ring.p
    result = ring.one()
    base = f
    # base-p digits: f^(d0 + d1 p + ...) = f^d0 * Frob(f)^d1 * ...
    while n:
        n, d = divmod(n, p)
        if d:
            result = result * _small_pow(base, d)
        if n:
            base = base.frobenius()
    return result


def _small_pow(f, d):
    result = None
    base = f
    while d:
        if d & 1:
            result = base if result is None else result * base
        d >>= 1
        if d:
            base = base * base
    return result


def qth_power_decompose(f, e):
    """Split ``f = sum_a (f_a)^q x^a`` with residues ``a`` in ``[0, q)^n``, ``q = p^e``.

    Returns ``{a: f_a}``.  Each monomial ``x^m`` goes to key ``m mod q`` with
    component monomial ``x^(m // q)``; coefficients pass through unchanged
    because the q-th power map is the identity on F_p.
    """
    if e < 1:
        raise ValueError(f"decomposition depth must be positive, got {e}")
    ring = f.ring
    q = ring.p ** e
    parts = {}
    for m, c in f.terms.items():
        key = tuple(x % q for x in m)
        parts.setdefault(key, {})[tuple(x // q for x in m)] = c
    return {a: Polynomial(ring, t, _clean=True) for a, t in parts.items()}


def render(f):
    """Canonical text: descending order, ``^`` for powers, explicit ``*``."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    pieces = []
    for m, c in f.sorted_terms():
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            pieces.append(str(c))
        elif c == 1:
            pieces.append("*".join(factors))
        else:
            pieces.append(f"{c}*" + "*".join(factors))
    return " + ".join(pieces)
