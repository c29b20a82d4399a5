"""Test ideals and F-jumping numbers of mixed pairs over F_p[x_1..x_n]."""

from .frobenius import CartierMap, cartier_in_subsheaf, frobenius_root, frobenius_root_of_product
from .groebner import Ideal, bracket_power, groebner_basis, ideal_contains, ideal_equals
from .jumping import (Jump, JumpReport, NoJumpFound, ParametricPair, enumerate_jumps, fpt,
                      is_jump_at, scaling_counterexample_check)
from .oracle import NewtonPolyhedron, howald_jumps, howald_multiplier, nu_value
from .pairs import DivisorCombination, MixedPair, pair_from_divisor, skoda_normalize, twist
from .parse import ParseError, parse_ideal, parse_pair, parse_polynomial
from .poly import Polynomial, PolynomialRing
from .ring import PrimeChar, simplest_rational_in
from .testideal import (ChainConfig, NonStabilizationError, tau, tau_details, tau_remark23,
                        tau_with_divisor)

__all__ = [
    "CartierMap", "ChainConfig", "DivisorCombination", "Ideal", "Jump", "JumpReport",
    "MixedPair", "NewtonPolyhedron", "NoJumpFound", "NonStabilizationError", "ParametricPair",
    "ParseError", "Polynomial", "PolynomialRing", "PrimeChar", "bracket_power",
    "cartier_in_subsheaf", "enumerate_jumps", "fpt", "frobenius_root",
    "frobenius_root_of_product", "groebner_basis", "howald_jumps", "howald_multiplier",
    "ideal_contains", "ideal_equals", "is_jump_at", "nu_value", "pair_from_divisor",
    "parse_ideal", "parse_pair", "parse_polynomial", "scaling_counterexample_check",
    "simplest_rational_in", "skoda_normalize", "tau", "tau_details", "tau_remark23",
    "tau_with_divisor", "twist",
]
