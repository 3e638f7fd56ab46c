"""Exact homology, graded quiver representations and their hom complexes."""

from ._core import (
    ClassificationError,
    Error,
    InputError,
    ReferenceError,
    ShapeError,
    UnsupportedDifferentialError,
    ValidationError,
    classify,
    cohomology,
    euler_characteristic,
    euler_of_hom,
    floer,
    hom_space,
    homology,
    kernel_basis,
    rank,
    validate_representation,
    verify,
)

__all__ = [
    "ClassificationError",
    "Error",
    "InputError",
    "ReferenceError",
    "ShapeError",
    "UnsupportedDifferentialError",
    "ValidationError",
    "classify",
    "cohomology",
    "euler_characteristic",
    "euler_of_hom",
    "floer",
    "hom_space",
    "homology",
    "kernel_basis",
    "rank",
    "validate_representation",
    "verify",
]
