"""Structural analysis of algebra tables over the parameter fraction field."""

from .echelon import (
    Subspace,
    determinant,
    echelonize,
    full_space,
    generic_rank,
    inverse,
    nullspace,
    zero_subspace,
)
from .grading import (
    GradingVerdict,
    GradingWitness,
    Violation,
    check_grading_witness,
    detect_type_r,
    graded_algebra,
)
from .invariants import (
    Filiformity,
    Fingerprint,
    classify_dims,
    classify_filiformity,
    fingerprint,
    lcs_dims,
    left_annihilator,
    lower_central_series,
    nilindex,
    right_annihilator,
    subspace_product,
    sym_antisym_ranks,
)

__all__ = [
    "Filiformity",
    "Fingerprint",
    "GradingVerdict",
    "GradingWitness",
    "Subspace",
    "Violation",
    "check_grading_witness",
    "classify_dims",
    "classify_filiformity",
    "detect_type_r",
    "determinant",
    "echelonize",
    "fingerprint",
    "full_space",
    "generic_rank",
    "graded_algebra",
    "inverse",
    "lcs_dims",
    "left_annihilator",
    "lower_central_series",
    "nilindex",
    "nullspace",
    "right_annihilator",
    "subspace_product",
    "sym_antisym_ranks",
    "zero_subspace",
]
