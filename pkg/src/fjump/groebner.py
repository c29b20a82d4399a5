"""Ideals in F_p[x_1..x_n]: Buchberger bases, normal forms and ideal arithmetic."""

import heapq
from itertools import combinations

from .poly import Polynomial
from .ring import fp_inv


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_terms(terms, basis, ring):
    """Full multivariate division of ``terms`` by ``basis``; returns the remainder dict.

    ``basis`` must hold nonzero polynomials; the first one whose leading
    monomial divides the current term is used.
    """
    p = ring.p
    hkey = ring.heap_key
    f = dict(terms)
    heap = [(hkey(m), m) for m in f]
    heapq.heapify(heap)
    queued = set(f)
    leads = [(g.lm, fp_inv(g.lc, p), g) for g in basis]
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = f.pop(m, 0)
        if not c:
            continue
        for gm, ginv, g in leads:
            if _divides(gm, m):
                shift = tuple(x - y for x, y in zip(m, gm))
                coef = c * ginv % p
                for tm, tc in g.terms.items():
                    if tm == gm:
                        continue
                    mm = tuple(x + y for x, y in zip(tm, shift))
                    v = (f.get(mm, 0) - coef * tc) % p
                    if v:
                        f[mm] = v
                        if mm not in queued:
                            queued.add(mm)
                            heapq.heappush(heap, (hkey(mm), mm))
                    else:
                        f.pop(mm, None)
                break
        else:
            rem[m] = c
    return rem


def _spoly(f, g):
    L = _lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(L, f.lm)), fp_inv(f.lc, f.ring.p))
    b = g.mul_term(tuple(x - y for x, y in zip(L, g.lm)), fp_inv(g.lc, g.ring.p))
    return a - b


def _minimal_monomials(monos):
    monos = sorted(set(monos), key=sum)
    keep = []
    for m in monos:
        if not any(_divides(k, m) for k in keep):
            keep.append(m)
    return keep


def _canonical(polys, ring):
    """Deterministic order: descending leading monomial, then full term list."""
    return tuple(sorted(polys, key=lambda g: [ring.key(m) for m, _ in g.sorted_terms()],
                        reverse=True))


def groebner_basis(generators, ring):
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    Buchberger's algorithm with normal pair selection (smallest lcm first)
    and both Buchberger criteria.  Monomial inputs take a direct path.
    """
    gens = [g for g in generators if g]
    if not gens:
        return ()
    if any(g.is_constant() for g in gens):
        return (ring.one(),)
    if all(g.is_monomial() for g in gens):
        return _canonical([ring.monomial(m) for m in _minimal_monomials(g.lm for g in gens)], ring)

    key = ring.key
    G = [g.monic() for g in _canonical(gens, ring)]
    G.reverse()
    pairs = set(combinations(range(len(G)), 2))
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(G[ij[0]].lm, G[ij[1]].lm)), ij))
        pairs.discard((i, j))
        mi, mj = G[i].lm, G[j].lm
        L = _lcm(mi, mj)
        if all(x == 0 or y == 0 for x, y in zip(mi, mj)):
            continue
        if any(k != i and k != j and _divides(G[k].lm, L)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = reduce_terms(_spoly(G[i], G[j]).terms, G, ring)
        if h:
            h = Polynomial(ring, h, _clean=True).monic()
            if h.is_constant():
                return (ring.one(),)
            n = len(G)
            G.append(h)
            pairs.update((k, n) for k in range(n))
    return _reduce_basis(G, ring)


def _reduce_basis(G, ring):
    minimal = []
    for g in sorted(G, key=lambda g: ring.key(g.lm)):
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = {m: c for m, c in g.terms.items() if m != g.lm}
        r = reduce_terms(tail, others, ring)
        r[g.lm] = g.lc
        reduced.append(Polynomial(ring, r, _clean=True).monic())
    return _canonical(reduced, ring)


class Ideal:
    """A finitely generated ideal with a lazily computed reduced Groebner basis."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, (str, int)):
                g = ring.parse(str(g))
            if not isinstance(g, Polynomial):
                raise TypeError(f"not a polynomial: {g!r}")
            if g.ring != ring:
                raise ValueError(f"ring mismatch: {g.ring} vs {ring}")
            if not g:
                raise ValueError("ideal generators must be nonzero")
            gens.append(g)
        self.generators = tuple(gens)
        self._gb = None

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @property
    def gb(self):
        # pure memoization: concurrent fills compute the same tuple
        if self._gb is None:
            self._gb = groebner_basis(self.generators, self.ring)
        return self._gb

    def _same_ring(self, other):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return len(self.gb) == 1 and self.gb[0].is_constant()

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def principal_generator(self):
        """The generator if the ideal is principal (detected via its reduced basis), else None."""
        if len(self.generators) == 1:
            return self.generators[0]
        if len(self.gb) == 1:
            return self.gb[0]
        return None

    def normal_form(self, f):
        if f.ring != self.ring:
            raise ValueError(f"ring mismatch: {f.ring} vs {self.ring}")
        return Polynomial(self.ring, reduce_terms(f.terms, self.gb, self.ring), _clean=True)

    def contains(self, f):
        if isinstance(f, Ideal):
            return f <= self
        return not self.normal_form(f)

    __contains__ = contains

    def __le__(self, other):
        """Containment of ideals."""
        self._same_ring(other)
        return all(other.contains(g) for g in self.generators)

    def __ge__(self, other):
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._same_ring(other)
        return self.gb == other.gb

    def __hash__(self):
        return hash((self.ring, self.gb))

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Ideal(self.ring, [g * other for g in self.generators])
        return ideal_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        return ideal_power(self, n)

    def minimal_generators(self):
        return interreduce(self.generators, self.ring)

    def canonical(self):
        """Same ideal, generated by its reduced basis."""
        out = Ideal(self.ring, self.gb)
        out._gb = self.gb
        return out

    def strings(self):
        """Reduced-basis generators in canonical rendering, sorted."""
        return sorted(str(g) for g in self.gb)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gb) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def interreduce(generators, ring):
    """Drop generators lying in the ideal of the remaining ones."""
    gens = list(dict.fromkeys(g.monic() for g in generators if g))
    if all(g.is_monomial() for g in gens):
        return [ring.monomial(m) for m in _minimal_monomials(g.lm for g in gens)]
    gens.sort(key=lambda g: [ring.key(m) for m, _ in g.sorted_terms()], reverse=True)
    kept = list(gens)
    for g in gens:
        rest = [h for h in kept if h is not g]
        if rest and not reduce_terms(g.terms, groebner_basis(rest, ring), ring):
            kept = rest
    return kept


def normal_form(f, I):
    return I.normal_form(f)


def ideal_contains(I, f):
    return I.contains(f)


def ideal_equals(I, J):
    return I == J


def ideal_sum(I, J):
    I._same_ring(J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J, reduce=True):
    I._same_ring(J)
    gens = [f * g for f in I.generators for g in J.generators]
    if reduce:
        gens = interreduce(gens, I.ring)
    return Ideal(I.ring, gens)


def ideal_power(I, n):
    """``I^n`` by repeated squaring, interreducing after every product; ``I^0 = (1)``."""
    if n < 0:
        raise ValueError("negative ideal power")
    result = Ideal.unit(I.ring)
    base = I
    while n:
        if n & 1:
            result = ideal_product(result, base)
        n >>= 1
        if n:
            base = ideal_product(base, base)
    return result


def bracket_power(I, e):
    """Frobenius power ``I^[p^e]``, generated by the p^e-th powers of the generators."""
    if e < 1:
        raise ValueError(f"bracket power depth must be positive, got {e}")
    return Ideal(I.ring, [g.frobenius(e) for g in I.generators])
