"""Well-rounded ideal lattices from quadratic and cyclotomic number fields."""

from ._core import (
    InvalidInput,
    InvariantViolation,
    classify,
    cyclo,
    family,
    survey,
    tables,
)

__all__ = [
    "InvalidInput",
    "InvariantViolation",
    "classify",
    "cyclo",
    "family",
    "survey",
    "tables",
]
