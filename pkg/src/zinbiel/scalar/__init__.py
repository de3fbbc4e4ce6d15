"""Exact coefficient arithmetic over rational functions in named parameters."""

from fractions import Fraction as Rational

from .grammar import format_polynomial, parse_scalar, print_scalar
from .poly import Polynomial, divexact, gcd, lcm
from .ratfunc import ONE_S as ONE, ZERO, Scalar, binomial, scalar_eval

__all__ = [
    "ONE",
    "ZERO",
    "Polynomial",
    "Rational",
    "Scalar",
    "binomial",
    "divexact",
    "format_polynomial",
    "gcd",
    "lcm",
    "parse_scalar",
    "print_scalar",
    "scalar_eval",
]
