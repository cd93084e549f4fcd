"""Exact arithmetic over ZZ, QQ and Q[t, t^-1] and the matrix normal forms."""

from .laurent import LaurentPoly, T
from .rings import LAURENT, QQ, ZZ
from .matrix import ExactMatrix, matrix_from_vectors
from .normal_forms import (
    DimensionMismatch,
    coordinate_preimage,
    determinant,
    integer_kernel,
    invariant_factors,
    kernel_basis,
    kernel_with_left_inverse,
    preimage_basis,
    rank_over_fractions,
    smith_normal_form,
    snf_int,
    snf_laurent,
    submodule_basis,
)

__all__ = [
    "LaurentPoly", "T", "ZZ", "QQ", "LAURENT", "ExactMatrix", "matrix_from_vectors",
    "DimensionMismatch", "coordinate_preimage", "determinant", "integer_kernel",
    "invariant_factors", "kernel_basis", "kernel_with_left_inverse", "preimage_basis",
    "rank_over_fractions", "smith_normal_form", "snf_int", "snf_laurent", "submodule_basis",
]
