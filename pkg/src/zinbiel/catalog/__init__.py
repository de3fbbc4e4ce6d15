"""The classified algebras, as printed, with expected profiles."""

from .registry import (
    EXPECTED_SEPARATIONS,
    FAMILIES,
    Anomaly,
    CatalogEntry,
    CatalogKey,
    ExpectedProfile,
    Family,
    Section,
    family,
    list_keys,
    make,
    sections_for,
)
from .verify import Check, Record, Report, generic_square, verify_catalog, verify_entry

__all__ = [
    "EXPECTED_SEPARATIONS",
    "FAMILIES",
    "Anomaly",
    "CatalogEntry",
    "CatalogKey",
    "Check",
    "ExpectedProfile",
    "Family",
    "Record",
    "Report",
    "Section",
    "family",
    "generic_square",
    "list_keys",
    "make",
    "sections_for",
    "verify_catalog",
    "verify_entry",
]
