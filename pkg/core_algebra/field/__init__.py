from core_algebra.field.element import (
    FieldElement, conjugate, embed_numeric, field_arith, field_inverse, inner_product,
    orthogonal, squared_norm,
)
from core_algebra.field.embedding import find_numeric_root
from core_algebra.field.number_field import NumberField, cyclotomic_poly, field_from_coeffs, validate_field

__all__ = [
    "FieldElement",
    "NumberField",
    "conjugate",
    "cyclotomic_poly",
    "embed_numeric",
    "field_arith",
    "field_from_coeffs",
    "field_inverse",
    "find_numeric_root",
    "inner_product",
    "orthogonal",
    "squared_norm",
    "validate_field",
]
