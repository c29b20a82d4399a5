"""Frobenius roots of ideals and p^{-e}-linear (Cartier) maps on F_p[x_1..x_n].

``I^[1/q]`` is the smallest ideal J with I contained in J^[q].  Over the
polynomial ring it is spanned by the components f_a of the decompositions
f = sum_a (f_a)^q x^a of the generators of I.
"""

from dataclasses import dataclass
from itertools import product

from .groebner import Ideal, groebner_basis, ideal_power, interreduce
from .pairs import DivisorCombination
from .poly import Polynomial, qth_power_decompose
from .ring import rat_ceil_scale


@dataclass(frozen=True)
class CartierMap:
    """The map phi(F^e_* r) = Phi_e(g * r), Phi_e the trace generator.

    Phi_e sends x^a (x^b)^q to x^b when a = (q-1, ..., q-1) and kills the
    other residues, so every element of Hom(F^e_* R, R) has this form.
    """

    e: int
    premultiplier: Polynomial

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"Cartier map level must be positive, got {self.e}")
        if not self.premultiplier:
            raise ValueError("premultiplier must be nonzero")

    def __call__(self, f):
        ring = f.ring
        top = (ring.p**self.e - 1,) * ring.nvars
        return qth_power_decompose(self.premultiplier * f, self.e).get(top, ring.zero())


def frobenius_root(I, e):
    """``I^[1/p^e]``, computed generator by generator and interreduced."""
    if e < 1:
        raise ValueError(f"Frobenius root depth must be positive, got {e}")
    comps = []
    for g in I.generators:
        comps.extend(qth_power_decompose(g, e).values())
    return Ideal(I.ring, interreduce(comps, I.ring))


def premultiplier_factors(delta, e, ring):
    """``[((g_i), ceil(c_i (p^e - 1)))]``: the Delta-compatible premultipliers as a product."""
    q = ring.p**e
    return [(Ideal(ring, [g]), rat_ceil_scale(c, q - 1)) for g, c in delta.components]


def allowed_premultipliers(delta, e, ring):
    """Principal ideal of premultipliers g for which Phi_e(g * -) is Delta-compatible.

    Realizes D_phi >= (p^e - 1) Delta on principal components as membership
    in the product of g_i^ceil(c_i (p^e - 1)).
    """
    gen = ring.one()
    for I, n in premultiplier_factors(delta, e, ring):
        gen = gen * I.generators[0]**n
    return Ideal(ring, [gen])


def cartier_in_subsheaf(phi, delta):
    """Whether phi lies in Hom(F^e_* R(ceil((p^e - 1) Delta)), R)."""
    if not isinstance(delta, DivisorCombination):
        raise TypeError("delta must be a DivisorCombination")
    ring = phi.premultiplier.ring
    return allowed_premultipliers(delta, phi.e, ring).contains(phi.premultiplier)


def _gamma_choices(k, M, p):
    """Digit vectors gamma in [0, p)^k with |gamma| = M mod p and |gamma| <= M."""
    out = []
    for gamma in product(range(p), repeat=k):
        s = sum(gamma)
        if s <= M and (M - s) % p == 0:
            out.append((gamma, (M - s) // p))
    return out


def frobenius_root_of_product(factors, e, start=None):
    """``(prod_i I_i^{N_i} * K)^[1/p^e]`` without forming the large powers.

    ``factors`` is a list of ``(Ideal, N)``; ``start`` is the ideal K
    (default the unit ideal).  One Frobenius root is taken per step using

        I^M = sum_gamma (I^{(M - |gamma|)/p})^[p] g^gamma,    gamma in [0, p)^k

    for I = (g_1..g_k), together with (A^[p] B)^[1/p] = A B^[1/p].  The
    exponents M shrink by a factor p each step while K stays small.
    For principal factors gamma is the lowest base-p digit of M.
    """
    if e < 0:
        raise ValueError("negative root depth")
    if start is not None:
        ring = start.ring
    elif factors:
        ring = factors[0][0].ring
    else:
        raise ValueError("need at least one factor or a start ideal")
    p = ring.p
    facs = []
    for I, N in factors:
        if N < 0:
            raise ValueError("negative exponent")
        if N == 0 or I.is_unit():
            continue
        g = I.principal_generator()
        gens = (g,) if g is not None else tuple(interreduce(I.generators, ring))
        facs.append([I, gens, N])
    K = list(start.gb) if start is not None else [ring.one()]
    pow_cache = {}
    ideal_pow_cache = {}

    def gamma_poly(i, gamma):
        key = (i, gamma)
        if key not in pow_cache:
            out = ring.one()
            for g, d in zip(facs[i][1], gamma):
                if d:
                    out = out * g**d
            pow_cache[key] = out
        return pow_cache[key]

    def offset_ideal(i, n):
        key = (i, n)
        if key not in ideal_pow_cache:
            ideal_pow_cache[key] = ideal_power(Ideal(ring, facs[i][1]), n)
        return ideal_pow_cache[key]

    for _ in range(e):
        choices = [_gamma_choices(len(gens), M, p) for _, gens, M in facs]
        new_M = [min(m for _, m in ch) for ch in choices]
        gens_out = []
        for combo in product(*choices):
            mult = ring.one()
            for i, (gamma, _) in enumerate(combo):
                mult = mult * gamma_poly(i, gamma)
            comps = []
            for k in K:
                comps.extend(qth_power_decompose(mult * k, 1).values())
            piece = comps
            for i, (_, m) in enumerate(combo):
                off = m - new_M[i]
                if off:
                    piece = [a * b for a in piece for b in offset_ideal(i, off).generators]
            gens_out.extend(piece)
        K = list(groebner_basis(gens_out, ring))
        for f, m in zip(facs, new_M):
            f[2] = m
        if len(K) == 1 and K[0].is_constant() and all(f[2] == 0 for f in facs):
            break
    result = Ideal(ring, K)
    for I, gens, M in facs:
        if M:
            result = Ideal(ring, [a * b for a in result.generators
                                  for b in ideal_power(Ideal(ring, gens), M).generators])
    return Ideal(ring, groebner_basis(result.generators, ring))
