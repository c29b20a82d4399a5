"""Test ideals of mixed pairs on F_p[x_1..x_n].

The main route is the ascending chain

    J_e = (prod_i I_i^{ceil(s_i p^e)})^[1/p^e],

which stabilizes at tau.  The test-element sum over Cartier maps,
``sum_e phi(F^e_* c prod_i I_i^{ceil(s_i (p^e - 1))})``, is kept as a
second, independent route (``tau_remark23`` and ``tau_with_divisor``).
"""

from dataclasses import dataclass, field
from math import gcd

from .frobenius import frobenius_root_of_product, premultiplier_factors
from .groebner import Ideal
from .pairs import DivisorCombination, MixedPair, drop_trivial, pair_from_divisor
from .ring import p_adic_depth, rat_ceil_scale


@dataclass(frozen=True)
class ChainConfig:
    e_floor: int = 2
    confirm_steps: int = 2
    e_cap: int = 12

    def __post_init__(self):
        if not 1 <= self.e_floor <= self.e_cap:
            raise ValueError("need 1 <= e_floor <= e_cap")
        if self.confirm_steps < 1:
            raise ValueError("confirm_steps must be at least 1")


DEFAULT_CONFIG = ChainConfig()


class NonStabilizationError(RuntimeError):
    """The chain hit ``e_cap`` before the required run of equal levels."""

    def __init__(self, pair, levels):
        self.pair = pair
        self.levels = levels
        last = levels[-2:]
        super().__init__(
            f"test ideal chain for {pair} did not stabilize by level {len(levels) - 1}; "
            f"last two levels: {' vs '.join(str(J) for J in last)}")


class ChainAscentError(AssertionError):
    pass


@dataclass
class TauResult:
    ideal: Ideal
    depth: int              # first chain level whose value equals the final ideal
    last_level: int         # deepest level computed
    start_level: int        # p-adic depth of the exponents; the chain starts here
    exact: bool             # closed by an exact criterion rather than by confirmation
    levels: list = field(default_factory=list, repr=False)


def chain_level(pair, e, shift=0):
    """J_e = (prod I_i^{ceil(s_i p^e) - shift})^[1/p^e]; ``shift=1`` gives the upper sandwich."""
    q = pair.ring.p**e
    factors = []
    for I, s in pair.factors:
        n = rat_ceil_scale(s, q)
        if shift and s > 0:
            n -= shift
        factors.append((I, n))
    if not factors:
        return Ideal.unit(pair.ring)
    return frobenius_root_of_product(factors, e)


def tau_details(pair, cfg=None):
    """Test ideal of ``pair`` with bookkeeping about how the chain closed.

    Levels run from e0, the largest p-adic depth among the exponents, up to
    e0 + e_cap.  Pairs of principal ideals are closed exactly (see
    ``_principal_tau``).  Otherwise the chain is declared stable after
    ``confirm_steps`` consecutive equalities at relative depth at least
    ``e_floor``.
    """
    cfg = cfg or DEFAULT_CONFIG
    ring = pair.ring
    work = drop_trivial(pair)
    if not work.factors:
        one = Ideal.unit(ring)
        return TauResult(one, 0, 0, 0, True, [one])
    p = ring.p
    e0 = max(p_adic_depth(s, p) for s in work.exponents())
    if work.is_principal():
        return _principal_tau(work, e0, cfg)

    levels = []
    for e in range(e0, e0 + cfg.e_cap + 1):
        J = chain_level(work, e)
        _check_ascent(levels, J, e, pair)
        levels.append(J)
        c = cfg.confirm_steps
        if e - e0 >= cfg.e_floor and len(levels) > c and all(
                levels[-1] == K for K in levels[-1 - c:-1]):
            return _result(levels, e0, exact=False)
    raise NonStabilizationError(pair, levels)


def _check_ascent(levels, J, e, pair):
    if levels and not levels[-1] <= J:
        raise ChainAscentError(f"chain dropped between levels {e - 1} and {e} for {pair}")


def _multiplicative_order(p, d):
    m, x = 1, p % d
    while x != 1 % d:
        x = x * p % d
        m += 1
    return m


def _principal_tau(work, k, cfg):
    """Exact test ideal of a product of principal ideals.

    Write s_i p^k = n_i + r_i with n_i integral and r_i in [0, 1) of
    denominator prime to p.  Then tau = (prod f_i^{n_i} * T)^[1/p^k] with
    T = tau(prod f_i^{r_i}).  Choosing m with every a_i = r_i (p^m - 1)
    integral, T is the smallest nonzero ideal J with
    (prod f_i^{a_i} J)^[1/p^m] inside J.  Chain levels lie inside T, so the
    first level passing that test is T itself.
    """
    ring = work.ring
    q = ring.p**k
    whole, frac = [], []
    for I, s in work.factors:
        n, r = divmod(s * q, 1)
        whole.append((I, int(n)))
        if r:
            frac.append((I, r))
    levels = []
    if frac:
        D = 1
        for _, r in frac:
            D = D * r.denominator // gcd(D, r.denominator)
        m = _multiplicative_order(ring.p, D)
        Q = ring.p**m - 1
        twisted = [(I, int(r * Q)) for I, r in frac]
        rpair = MixedPair(ring, frac)
        for e in range(1, cfg.e_cap + 1):
            J = chain_level(rpair, e)
            _check_ascent(levels, J, e, work)
            levels.append(J)
            if frobenius_root_of_product(twisted, m, start=J) <= J:
                break
        else:
            raise NonStabilizationError(work, levels)
        T = levels[-1]
    else:
        T = Ideal.unit(ring)
    final = frobenius_root_of_product(whole, k, start=T)
    depth = len(levels)
    while depth > 1 and levels[depth - 2] == T:
        depth -= 1
    return TauResult(final, k + depth, k + len(levels), k, True, levels or [final])


def _result(levels, e0, exact):
    final = levels[-1]
    depth = len(levels) - 1
    while depth > 0 and levels[depth - 1] == final:
        depth -= 1
    return TauResult(final, e0 + depth, e0 + len(levels) - 1, e0, exact, levels)


def tau(pair, cfg=None):
    """The test ideal tau(prod_i I_i^{s_i})."""
    return tau_details(pair, cfg).ideal


def _test_element_sum(pair, c, E, extra=None):
    """sum_{e=0..E} (c * extra_e * prod I_i^{ceil(s_i (p^e - 1))})^[1/p^e]."""
    ring = pair.ring
    start = Ideal(ring, [c])
    total = start
    for e in range(1, E + 1):
        q = ring.p**e
        factors = [(I, rat_ceil_scale(s, q - 1)) for I, s in pair.factors]
        if extra is not None:
            factors.extend(extra(e))
        total = total + frobenius_root_of_product(factors, e, start=start)
    return total.canonical()


def _check_test_element(c, target):
    if not c:
        raise ValueError("test element must be nonzero")
    if not target.contains(c):
        raise ValueError(f"{c} does not lie in the test ideal {target}; not a test element")


def tau_remark23(pair, c, E, cfg=None, known_tau=None):
    """Test ideal rebuilt from the test element ``c`` by summing Cartier-map images.

    Every p^{-e}-linear map on the polynomial ring is Phi_e(g * -), so the
    sum over all maps at level e is one Frobenius root.  ``c`` must lie in
    tau(pair); pass ``known_tau`` to skip recomputing it.
    """
    if isinstance(c, str):
        c = pair.ring.parse(c)
    target = known_tau if known_tau is not None else tau(pair, cfg)
    _check_test_element(c, target)
    return _test_element_sum(drop_trivial(pair), c, E)


def tau_with_divisor(delta, rest, c, E, cfg=None, known_tau=None):
    """Test ideal of (R, Delta, rest) with Delta kept on the map side.

    At level e only maps Phi_e(g * -) with g in the Delta-compatible
    premultiplier ideal (prod g_i^{ceil(c_i (p^e - 1))}) are summed; the
    ideal factors of ``rest`` enter with exponents ceil(s (p^e - 1)).
    """
    if not isinstance(delta, DivisorCombination):
        raise TypeError("delta must be a DivisorCombination")
    ring = rest.ring
    target = known_tau if known_tau is not None else tau(pair_from_divisor(delta, rest), cfg)
    _check_test_element(c, target)

    def premultipliers(e):
        return premultiplier_factors(delta, e, ring)

    return _test_element_sum(drop_trivial(rest), c, E, extra=premultipliers if len(delta) else None)


def tau_of_divisor_pair(delta, rest, cfg=None):
    return tau(pair_from_divisor(delta, rest), cfg)


__all__ = ["ChainConfig", "DEFAULT_CONFIG", "NonStabilizationError", "ChainAscentError",
           "TauResult", "chain_level", "tau", "tau_details", "tau_remark23",
           "tau_with_divisor", "tau_of_divisor_pair", "MixedPair"]
