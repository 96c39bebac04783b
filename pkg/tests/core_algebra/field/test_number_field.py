from fractions import Fraction

import pytest

from core_algebra.exact.polynomial import RationalPoly
from core_algebra.field.number_field import cyclotomic_poly, field_from_coeffs, validate_field
from core_algebra.schemas.models import ConjugationSpec
from shared_utils.constants import ConjugationKind
from shared_utils.error_handler import (
    DivisionByZeroError, FieldValidationError, IrreducibilityUnverifiedError, ReduciblePolynomialError,
)

REDUCIBLE_QUINTIC = RationalPoly([2, 0, 1]) * RationalPoly([3, 0, 0, 1])  # (x^2 + 2)(x^3 + 3)


def test_sqrt_field_properties(sqrt_field):
    assert sqrt_field.degree == 4
    assert sqrt_field.verified
    assert sqrt_field.conjugation_is_identity
    assert sqrt_field.alpha_star_poly == RationalPoly.x()
    assert str(sqrt_field.min_poly) == "x^4 - 10*x^2 + 1"


def test_cyclotomic_poly():
    assert cyclotomic_poly(5) == RationalPoly([1, 1, 1, 1, 1])
    assert cyclotomic_poly(3).degree == 2


def test_cyclotomic_alpha_star(cyc5_field):
    # alpha^4 = -(1 + alpha + alpha^2 + alpha^3)
    assert cyc5_field.alpha_star_poly == RationalPoly([-1, -1, -1, -1])
    assert cyc5_field.alpha_star_element == cyc5_field.alpha() ** 4


def test_element_constructors(sqrt_field):
    assert sqrt_field.zero().coeffs == (0, 0, 0, 0)
    assert sqrt_field.one().coeffs == (1, 0, 0, 0)
    assert sqrt_field.alpha().coeffs == (0, 1, 0, 0)
    assert sqrt_field.constant("1/2").coeffs == (Fraction(1, 2), 0, 0, 0)
    # alpha^4 reduces to 10 alpha^2 - 1
    assert sqrt_field.from_poly(RationalPoly.monomial(4)).coeffs == (-1, 0, 10, 0)


def test_fields_compare_by_definition(sqrt_field):
    again = field_from_coeffs([1, 0, -10, 0, 1])
    assert again == sqrt_field
    assert hash(again) == hash(sqrt_field)
    assert again.element([1, 2, 3, 4]) == sqrt_field.element([1, 2, 3, 4])


def test_same_polynomial_different_conjugation_is_a_different_field(gaussian_field):
    real = validate_field(RationalPoly([1, 0, 1]), ConjugationSpec.real())
    assert real != gaussian_field


def test_rejects_low_degree():
    with pytest.raises(FieldValidationError, match="degree >= 2"):
        validate_field(RationalPoly([-2, 1]))


def test_rejects_non_monic():
    with pytest.raises(FieldValidationError, match="monic"):
        validate_field(RationalPoly([1, 0, 2]))


def test_rejects_reducible_with_factor():
    with pytest.raises(ReduciblePolynomialError) as excinfo:
        validate_field(RationalPoly([-1, 0, 1]))
    assert excinfo.value.factor in ("x - 1", "x + 1")


def test_rejects_reducible_quartic():
    with pytest.raises(ReduciblePolynomialError) as excinfo:
        validate_field(RationalPoly([6, 0, -5, 0, 1]))
    assert excinfo.value.factor == "x^2 - 2"


def test_inconclusive_needs_waiver():
    with pytest.raises(IrreducibilityUnverifiedError):
        validate_field(REDUCIBLE_QUINTIC)


def test_waiver_builds_unverified_field():
    field = validate_field(REDUCIBLE_QUINTIC, allow_unverified=True)
    assert not field.verified
    # a factor of p is a zero divisor in the quotient ring
    with pytest.raises(DivisionByZeroError, match="zero divisor"):
        field.element([2, 0, 1, 0, 0]).inverse()


def test_verified_quintic():
    field = validate_field(RationalPoly([-1, -1, 0, 0, 0, 1]))
    assert field.verified
    assert field.degree == 5


def test_cyclotomic_needs_prime():
    with pytest.raises(FieldValidationError, match="prime"):
        validate_field(cyclotomic_poly(5), ConjugationSpec.cyclotomic(9))


def test_cyclotomic_needs_matching_polynomial():
    with pytest.raises(FieldValidationError, match="cyclotomic"):
        validate_field(RationalPoly([1, 0, -10, 0, 1]), ConjugationSpec.cyclotomic(5))


def test_explicit_conjugation_must_be_root():
    with pytest.raises(FieldValidationError, match="not a root"):
        validate_field(RationalPoly([1, 0, 1]), ConjugationSpec.explicit(["1", "0"]))


def test_explicit_conjugation_must_have_degree_coefficients():
    with pytest.raises(FieldValidationError, match="coefficients"):
        validate_field(RationalPoly([1, 0, 1]), ConjugationSpec.explicit(["0", "-1", "0"]))


def test_explicit_conjugation_must_be_involution():
    # alpha -> alpha^2 is an automorphism of order 4 of the fifth cyclotomic field
    with pytest.raises(FieldValidationError, match="involution"):
        validate_field(cyclotomic_poly(5), ConjugationSpec.explicit(["0", "0", "1", "0"]))


def test_explicit_matches_cyclotomic(cyc5_field):
    explicit = validate_field(cyclotomic_poly(5), ConjugationSpec.explicit(["-1", "-1", "-1", "-1"]))
    assert explicit.conjugation.kind is ConjugationKind.EXPLICIT
    a = explicit.element([1, 2, 3, 4])
    b = cyc5_field.element([1, 2, 3, 4])
    assert a.conjugate().coeffs == b.conjugate().coeffs


def test_numeric_root_is_lazy():
    field = validate_field(RationalPoly([-2, 0, 0, 1]))
    assert not field.has_numeric_root
    _ = field.numeric_root
    assert field.has_numeric_root
