"""Randomized and fixed verification suites.

Each suite returns a :class:`SuiteResult`; the CLI ``verify`` command and the
acceptance tests run the same functions.  Randomness comes only from the
``random.Random`` passed in, so a seed pins every case.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .frobenius import frobenius_root
from .groebner import Ideal, bracket_power
from .jumping import ParametricPair, enumerate_jumps, fpt, scaling_counterexample_check
from .oracle import howald_jumps, howald_multiplier, maximal_ideal, nu_value
from .pairs import MixedPair, twist
from .poly import PolynomialRing
from .testideal import DEFAULT_CONFIG, tau, tau_details, tau_remark23, tau_with_divisor

PRIMES = (2, 3, 5)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def failed(self):
        return len(self.failures)

    @property
    def ok(self):
        return not self.failures

    def check(self, cond, message):
        if cond:
            self.passed += 1
        else:
            self.failures.append(message)

    def summary(self):
        return f"{self.name}: {self.passed} passed, {self.failed} failed"


def random_poly(rng, ring, max_deg=3, max_terms=3):
    """Nonconstant polynomial with a zero constant term."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            while True:
                e = tuple(rng.randint(0, max_deg) for _ in range(ring.nvars))
                if 0 < sum(e) <= max_deg:
                    break
            terms[e] = rng.randrange(1, ring.p)
        f = ring.zero()
        for e, c in terms.items():
            f = f + ring.monomial(e, c)
        if f and not f.is_constant():
            return f


def random_exponent(rng, p, lo=0, hi=1):
    den = rng.choice((1, 2, 3, 4, p, p * p))
    num = rng.randint(lo * den, hi * den)
    return Fraction(num, den)


def random_ring(rng, order="grevlex"):
    p = rng.choice(PRIMES)
    names = ["x", "y"][:rng.randint(1, 2)]
    return PolynomialRing(p, names, order)


def random_rest(rng, ring, max_factors=1):
    factors = []
    for _ in range(rng.randint(0, max_factors)):
        if ring.nvars > 1 and rng.random() < 0.3:
            I = Ideal(ring, [random_poly(rng, ring, 2, 1) for _ in range(2)])
        else:
            I = Ideal(ring, [random_poly(rng, ring, 2, 2)])
        factors.append((I, random_exponent(rng, ring.p)))
    return MixedPair(ring, factors)


def skoda_suite(rng, n=50, cfg=None):
    """tau(f^{1+s} * rest) = f * tau(f^s * rest)."""
    res = SuiteResult("skoda")
    for _ in range(n):
        ring = random_ring(rng)
        f = random_poly(rng, ring, 2, 2)
        s = random_exponent(rng, ring.p, 0, 2)
        rest = random_rest(rng, ring)
        lhs = tau(rest.with_factor(f, 1 + s), cfg)
        rhs = tau(rest.with_factor(f, s), cfg) * f
        res.check(lhs == rhs, f"p={ring.p}: tau({rest}; ({f})^{1 + s}) = {lhs} but f*tau(...) = {rhs}")
    return res


def twist_suite(rng, n=50, cfg=None):
    """A principal factor gives the same test ideal on the ideal side and the divisor side.

    The ideal side is the chain; the divisor side sums Cartier maps whose
    premultipliers respect the divisor, seeded with a generator of tau.
    """
    res = SuiteResult("twist")
    for _ in range(n):
        ring = random_ring(rng)
        g = random_poly(rng, ring, 2, 2)
        b = random_exponent(rng, ring.p, 0, 2)
        rest = random_rest(rng, ring)
        pair = rest.with_factor(g, b)
        info = tau_details(pair, cfg)
        delta, rest2 = twist(pair, len(pair) - 1, "into-divisor")
        c = info.ideal.gb[0]
        other = tau_with_divisor(delta, rest2, c, info.depth + 2, cfg, known_tau=info.ideal)
        back_delta, back = twist(rest2, 0, "into-ideal", delta)
        res.check(other == info.ideal and back == pair and not len(back_delta),
                  f"p={ring.p}: ideal side {info.ideal} vs divisor side {other} for {pair}")
    return res


def remark23_suite(rng, n=25, cfg=None):
    """The test-element sum with E = depth + 2 reproduces tau."""
    res = SuiteResult("remark23")
    for _ in range(n):
        ring = random_ring(rng)
        pair = random_rest(rng, ring, 2)
        if not len(pair):
            pair = pair.with_factor(random_poly(rng, ring, 2, 2), random_exponent(rng, ring.p))
        info = tau_details(pair, cfg)
        c = info.ideal.gb[0]
        other = tau_remark23(pair, c, info.depth + 2, cfg, known_tau=info.ideal)
        res.check(other == info.ideal, f"p={ring.p}: tau({pair}) = {info.ideal}, sum gives {other}")
    return res


MONOMIAL_CASES = [
    # (variables, generators, [t values], jump interval hi)
    (["x"], ["x"], ["1/2", "1", "3/2", "5/2"], 3),
    (["x", "y"], ["x", "y"], ["1", "2", "5/2", "3"], 3),
    (["x", "y"], ["x^2", "y^3"], ["5/6", "1", "7/6", "4/3", "2"], 2),
    (["x", "y"], ["x^2", "y^2"], ["1", "3/2", "2"], 2),
    (["x", "y"], ["x^3", "y^2"], ["1/2", "5/6", "1"], 2),
    (["x", "y"], ["x^2", "x*y", "y^3"], ["2/3", "1", "4/3"], 2),
    (["x", "y"], ["x*y"], ["1/2", "1"], 2),
    (["x", "y"], ["x^2*y"], ["1/3", "1/2", "1"], 2),
]


def oracle_suite(primes=PRIMES, cfg=None):
    """tau and jump sets of monomial pairs against Howald's formula."""
    res = SuiteResult("oracle")
    for p in primes:
        for names, gens, ts, hi in MONOMIAL_CASES:
            ring = PolynomialRing(p, names)
            a = Ideal(ring, [ring.parse(g) for g in gens])
            for t in ts:
                t = Fraction(t)
                got = tau(MixedPair(ring, [(a, t)]), cfg)
                want = howald_multiplier(a, t)
                res.check(got == want, f"p={p} ({', '.join(gens)})^{t}: tau {got}, oracle {want}")
            report = enumerate_jumps(ParametricPair(MixedPair(ring), a), 0, hi, cfg=cfg)
            want = howald_jumps(a, 0, hi)
            res.check(report.values() == want and report.fully_certified(),
                      f"p={p} ({', '.join(gens)})^t on (0, {hi}]: jumps {report.values()}, "
                      f"oracle {want}")
    return res


def offset_pair(p):
    """x^{1/p} * (x)^t in one variable."""
    ring = PolynomialRing(p, ["x"])
    x = ring.var("x")
    return ParametricPair(MixedPair(ring, [(x, Fraction(1, p))]), Ideal(ring, [x]))


def offset_suite(primes=PRIMES, cfg=None):
    res = SuiteResult("offset")
    for p in primes:
        report = enumerate_jumps(offset_pair(p), 0, 3, cfg=cfg)
        want = [Fraction(k * p - 1, p) for k in (1, 2, 3)]
        res.check(report.values() == want and report.fully_certified(),
                  f"p={p}: jumps {report.values()}, expected {want}")
    return res


def scaling_suite(primes=PRIMES, cfg=None):
    res = SuiteResult("scaling")
    for p in primes:
        pair = offset_pair(p)
        report = enumerate_jumps(pair, 0, 3, cfg=cfg)
        rows = scaling_counterexample_check(pair, 1, report, cfg)
        res.check(rows and not any(r[2] for r in rows), f"p={p}: scaled offset-pair jumps {rows}")
        ring = PolynomialRing(p, ["x"])
        control = ParametricPair(MixedPair(ring), Ideal(ring, [ring.var("x")]))
        rep = enumerate_jumps(control, 0, 1, cfg=cfg)
        rows = scaling_counterexample_check(control, 1, rep, cfg)
        res.check(rows == [(1, p, True)], f"p={p}: control x^t scaled rows {rows}")
    return res


CUSP_CASES = [(2, Fraction(1, 2)), (7, Fraction(5, 6))]


def cusp_suite(e_max=4, cfg=None, strict_upper=False):
    """fpt(x^2 + y^3) at p = 2 and 7, each inside the bounds from nu = nu_f(q).

    The bounds are nu/q <= fpt <= (nu + 1)/q.  With ``strict_upper`` the
    right inequality is strict, which fails whenever (nu + 1)/q = fpt.
    """
    res = SuiteResult("cusp")
    for p, expected in CUSP_CASES:
        ring = PolynomialRing(p, ["x", "y"])
        f = ring.parse("x^2 + y^3")
        value = fpt(ParametricPair(MixedPair(ring), Ideal(ring, [f])), cfg=cfg)
        res.check(value == expected, f"p={p}: fpt {value}, expected {expected}")
        m = maximal_ideal(ring)
        for e in range(1, e_max + 1):
            nu = nu_value(f, e, m)
            q = p**e
            upper = Fraction(nu + 1, q)
            inside = value < upper if strict_upper else value <= upper
            rel = "<" if strict_upper else "<="
            res.check(Fraction(nu, q) <= value and inside,
                      f"p={p} e={e}: nu={nu}, need {nu}/{q} <= {value} {rel} {nu + 1}/{q}")
    return res


def froot_suite(rng, n=100):
    """Frobenius roots: undoing bracket powers, monotonicity, composition."""
    res = SuiteResult("froot")
    for _ in range(n):
        ring = random_ring(rng)
        I = Ideal(ring, [random_poly(rng, ring, 3, 3) for _ in range(rng.randint(1, 2))])
        J = I + Ideal(ring, [random_poly(rng, ring, 3, 2)])
        e = rng.choice((1, 2))
        rI = frobenius_root(I, e)
        ok = (frobenius_root(bracket_power(I, e), e) == I
              and rI <= frobenius_root(J, e)
              and I <= bracket_power(rI, e))
        if e == 2:
            ok = ok and frobenius_root(frobenius_root(I, 1), 1) == rI
        else:
            ok = ok and frobenius_root(frobenius_root(I, 1), 1) == frobenius_root(I, 2)
        res.check(ok, f"p={ring.p} e={e}: identities fail for {I}")
    return res


SUITES = ("offset", "scaling", "skoda", "twist", "remark23", "oracle", "cusp", "froot")


def run_suite(name, seed=0, cfg=None):
    """Run one suite; randomized suites each get their own stream derived from ``seed``."""
    cfg = cfg or DEFAULT_CONFIG
    rng = random.Random(f"{seed}:{name}")
    if name == "offset":
        return offset_suite(cfg=cfg)
    if name == "scaling":
        return scaling_suite(cfg=cfg)
    if name == "skoda":
        return skoda_suite(rng, cfg=cfg)
    if name == "twist":
        return twist_suite(rng, cfg=cfg)
    if name == "remark23":
        return remark23_suite(rng, cfg=cfg)
    if name == "oracle":
        return oracle_suite(cfg=cfg)
    if name == "cusp":
        return cusp_suite(cfg=cfg)
    if name == "froot":
        return froot_suite(rng)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


def run_suites(names, seed=0, cfg=None):
    if names == "all" or names == ["all"]:
        names = SUITES
    elif isinstance(names, str):
        names = [names]
    return [run_suite(n, seed, cfg) for n in names]
