"""Command-line frontend and file formats."""

from .fileformat import (
    AlgebraFile,
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    load_algebra,
    load_matrix,
    matrix_from_dict,
    matrix_to_dict,
)
from .main import build_parser, main

__all__ = [
    "AlgebraFile",
    "algebra_from_dict",
    "algebra_to_dict",
    "build_parser",
    "dump_algebra",
    "load_algebra",
    "load_matrix",
    "main",
    "matrix_from_dict",
    "matrix_to_dict",
]
