"""F-jumping numbers of t -> tau(base * a^t).

tau is non-increasing and right-continuous in t, so on a bracket (lo, hi]
equal values at both ends mean no jump inside.  ``enumerate_jumps`` bisects
brackets whose ends differ until the jump can be pinned to the unique
rational of bounded denominator inside, then certifies it.

Split points are taken on the grid of p-adic rationals a/p^k: at those
exponents tau of a principal pair is the single Frobenius root
(prod f_i^{s_i p^k})^[1/p^k], with no chain to stabilize.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .groebner import Ideal
from .pairs import MixedPair
from .ring import as_rational, simplest_rational_in
from .testideal import DEFAULT_CONFIG, tau

log = logging.getLogger(__name__)

DENOMINATOR_CLIP = 10**6


class ParametricPair:
    """``base * moving^t`` as a function of t."""

    def __init__(self, base, moving):
        if isinstance(moving, Ideal) and moving.is_zero():
            raise ValueError("moving ideal must be nonzero")
        if moving.ring != base.ring:
            raise ValueError("ring mismatch between base pair and moving ideal")
        self.base = base
        self.moving = moving

    @property
    def ring(self):
        return self.base.ring

    def at(self, t):
        t = as_rational(t)
        if t < 0:
            raise ValueError(f"t must be nonnegative, got {t}")
        return self.base.with_factor(self.moving, t)

    def __str__(self):
        mov = "(" + ", ".join(map(str, self.moving.generators)) + ")^t"
        return mov if not self.base.factors else f"{self.base}; {mov}"


@dataclass
class Jump:
    t: Fraction
    tau_before: Ideal
    tau_at: Ideal
    certified: bool
    bracket: tuple


@dataclass
class JumpReport:
    jumps: list
    interval: tuple
    denominator_bound: int
    uncertified: list = field(default_factory=list)   # brackets with no admissible rational

    @property
    def certified(self):
        return [j for j in self.jumps if j.certified]

    def values(self):
        return [j.t for j in self.jumps]

    def fully_certified(self):
        return not self.uncertified and all(j.certified for j in self.jumps)


def default_denominator_bound(p, cfg=None):
    cfg = cfg or DEFAULT_CONFIG
    q = p**cfg.e_cap
    return min(q * (q - 1), DENOMINATOR_CLIP)


class TauEvaluator:
    """Memoized t -> tau(pair.at(t)).  Idempotent, so sharing it is safe."""

    def __init__(self, pair, cfg=None):
        self.pair = pair
        self.cfg = cfg or DEFAULT_CONFIG
        self.memo = {}

    def __call__(self, t):
        t = Fraction(t)
        if t not in self.memo:
            self.memo[t] = tau(self.pair.at(t), self.cfg)
        return self.memo[t]


def is_jump_at(pair, t0, delta, cfg=None, evaluator=None):
    """Whether tau(t0 - delta) differs from tau(t0)."""
    t0, delta = as_rational(t0), as_rational(delta)
    if t0 <= 0 or not 0 < delta < t0:
        raise ValueError("need t0 > 0 and 0 < delta < t0")
    ev = evaluator or TauEvaluator(pair, cfg)
    return ev(t0 - delta) != ev(t0)


def grid_split(lo, hi, p):
    """A rational a/p^k strictly inside (lo, hi), with k minimal and a nearest the midpoint."""
    mid = (lo + hi) / 2
    q = 1
    while True:
        first = floor(lo * q) + 1
        last = ceil(hi * q) - 1
        if first <= last:
            a = min(max(round(mid * q), first), last)
            return Fraction(a, q)
        q *= p


def identify(lo, hi, bound):
    """Simplest rational in (lo, hi] with denominator <= bound, or None."""
    best = simplest_rational_in(lo, hi, bound)
    if hi.denominator <= bound and (best is None or hi.denominator < best.denominator):
        best = hi
    return best


def _resolved(lo, hi, bound):
    """Candidate rational once the bracket admits no competitor, else None.

    Two distinct rationals with denominators d and d' <= bound are at least
    1/(d d') apart, so a width below 1/(d bound) isolates the candidate.
    Returns ``(candidate_or_None, done)``.
    """
    width = hi - lo
    cand = identify(lo, hi, bound)
    if cand is not None and width * cand.denominator * bound < 1:
        return cand, True
    if width * 2 * bound * bound < 1:
        return cand, True
    return None, False


def _certify(ev, lo, hi, t0, p):
    """Check that tau drops at t0 and nowhere else in (lo, hi].

    Besides the end comparisons at offset delta = hi - lo, tau is probed at
    a point strictly between lo and t0; a drop there means the jump is not
    t0 (its denominator exceeds the bound).
    """
    delta = hi - lo
    before_t = t0 - delta
    if before_t < lo:
        before_t = lo
    tau_at = ev(t0)
    tau_before = ev(before_t)
    probe = grid_split(max(before_t, lo), t0, p) if max(before_t, lo) < t0 else lo
    ok = (tau_at == ev(hi) and tau_before == ev(lo) and ev(probe) == tau_before
          and tau_at <= tau_before and tau_at != tau_before)
    return Jump(t0, tau_before, tau_at, ok, (lo, hi))


def enumerate_jumps(pair, lo, hi, denominator_bound=None, cfg=None, evaluator=None,
                    first_only=False):
    """All F-jumping numbers of ``pair`` in ``(lo, hi]``.

    ``first_only`` stops at the leftmost jump.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not 0 <= lo < hi:
        raise ValueError("need 0 <= lo < hi")
    cfg = cfg or DEFAULT_CONFIG
    p = pair.ring.p
    bound = denominator_bound or default_denominator_bound(p, cfg)
    ev = evaluator or TauEvaluator(pair, cfg)
    jumps = []
    uncertified = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        if ev(a) == ev(b):
            continue
        cand, done = _resolved(a, b, bound)
        if done:
            if cand is None:
                log.warning("no rational of denominator <= %d in (%s, %s]", bound, a, b)
                uncertified.append((a, b))
            else:
                jump = _certify(ev, a, b, cand, p)
                if not jump.certified:
                    log.warning("jump candidate %s in (%s, %s] failed certification", cand, a, b)
                jumps.append(jump)
                if first_only and jump.certified:
                    break
            continue
        m = grid_split(a, b, p)
        # right half first on the stack so the left half is explored first
        stack.append((m, b))
        stack.append((a, m))
    jumps.sort(key=lambda j: j.t)
    return JumpReport(jumps, (lo, hi), bound, uncertified)


class NoJumpFound(RuntimeError):
    pass


def fpt(pair, denominator_bound=None, cfg=None, max_hi=64):
    """F-pure threshold: the first certified jump, searching [0, n] for n = 1, 2, 4, ..."""
    ev = TauEvaluator(pair, cfg)
    n = Fraction(1)
    while n <= max_hi:
        report = enumerate_jumps(pair, 0, n, denominator_bound, cfg, evaluator=ev,
                                 first_only=True)
        if report.jumps:
            first = report.jumps[0]
            if not first.certified:
                raise NoJumpFound(f"first jump candidate {first.t} in {first.bracket} "
                                  "could not be certified")
            return first.t
        if report.uncertified:
            raise NoJumpFound(f"first jump lies in uncertified bracket {report.uncertified[0]}")
        n *= 2
    raise NoJumpFound(f"no jump in [0, {max_hi}]; is the moving ideal proper?")


def scaling_counterexample_check(pair, e, report, cfg=None, evaluator=None):
    """For each certified jump t0, test whether p^e t0 is again a jump.

    Returns a list of ``(t0, p^e t0, is_jump)``.  The left offset used at
    p^e t0 is the first 1/p^k below 1/(2 d B), d its denominator and B the
    report's bound: closer than any other rational of denominator at most B,
    and on the p-adic grid so the evaluation stays cheap.
    """
    if e < 1:
        raise ValueError("e must be positive")
    ev = evaluator or TauEvaluator(pair, cfg)
    q = pair.ring.p**e
    rows = []
    for jump in report.jumps:
        if not jump.certified:
            continue
        t = q * jump.t
        limit = 2 * t.denominator * report.denominator_bound
        k = 1
        while pair.ring.p**k <= limit:
            k += 1
        delta = Fraction(1, pair.ring.p**k)
        rows.append((jump.t, t, is_jump_at(pair, t, delta, evaluator=ev)))
    return rows


__all__ = ["ParametricPair", "Jump", "JumpReport", "TauEvaluator", "is_jump_at",
           "enumerate_jumps", "fpt", "scaling_counterexample_check",
           "default_denominator_bound", "grid_split", "identify", "NoJumpFound", "MixedPair"]
