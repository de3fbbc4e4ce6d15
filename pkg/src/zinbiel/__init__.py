"""Exact verification and analysis of finite-dimensional Zinbiel algebras."""

from .algebra import AlgebraTable, Vector, ZinbielVerdict, abelian, is_zinbiel, multiply, zinbiel_defect
from .kernels import BACKEND
from .scalar import Polynomial, Scalar, binomial, parse_scalar, print_scalar

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "BACKEND",
    "Polynomial",
    "Scalar",
    "Vector",
    "ZinbielVerdict",
    "abelian",
    "binomial",
    "is_zinbiel",
    "multiply",
    "parse_scalar",
    "print_scalar",
    "zinbiel_defect",
]
