"""Exact computations on finitely generated submonoids of a free monoid."""

from monoidlab.errors import ContractViolation, InputError, TheoremViolation
from monoidlab.words import (
    Alphabet,
    WordSet,
    is_prefix,
    is_primitive,
    is_suffix,
    longest_common_prefix,
    primitive_root,
)

__all__ = [
    "Alphabet",
    "ContractViolation",
    "InputError",
    "TheoremViolation",
    "WordSet",
    "is_prefix",
    "is_primitive",
    "is_suffix",
    "longest_common_prefix",
    "primitive_root",
]
