"""Exact integer polynomials, matrices and real number fields."""

from .field import FieldElement, NumberField, mat_apply_field, min_poly_of
from .matrix import IntMatrix, char_poly, is_primitive
from .polynomial import IntPolynomial, IsolatingInterval, isolate_real_roots, largest_real_root

__all__ = [
    "FieldElement",
    "IntMatrix",
    "IntPolynomial",
    "IsolatingInterval",
    "NumberField",
    "char_poly",
    "is_primitive",
    "isolate_real_roots",
    "largest_real_root",
    "mat_apply_field",
    "min_poly_of",
]
