from fractions import Fraction

import pytest

from core_algebra.engine.demo import (
    inner_closed_form_cyclotomic5, inner_closed_form_sqrt, squared_norm_closed_form_sqrt,
)
from core_algebra.field.element import (
    FieldElement, conjugate, field_arith, field_inverse, inner_product, orthogonal, squared_norm,
)
from shared_utils.constants import ArithOp
from shared_utils.error_handler import DivisionByZeroError, FieldMismatchError, ValidationError


def _c(*values):
    return tuple(Fraction(v) for v in values)


class TestWorkedExamples:
    def test_product_sqrt_field(self, sqrt_field):
        product = sqrt_field.element([1, 1, 1, 1]) * sqrt_field.element([1, 1, -1, -1])
        assert product.coeffs == _c(12, 4, -108, -20)

    def test_product_cyclotomic5(self, cyc5_field):
        product = cyc5_field.element([1, 1, 1, 1]) * cyc5_field.element([1, 1, -1, -1])
        assert product.coeffs == _c(0, 2, 2, 1)

    def test_inner_alpha_alpha_real(self, sqrt_field):
        assert inner_product(sqrt_field.alpha(), sqrt_field.alpha()).coeffs == _c(0, 0, 1, 0)

    def test_conjugate_cyclotomic3(self, cyc3_field):
        assert conjugate(cyc3_field.element([5, 2])).coeffs == _c(3, -2)

    def test_inner_cyclotomic5(self, cyc5_field):
        result = inner_product(cyc5_field.one(), cyc5_field.alpha())
        assert result.coeffs == _c(-1, -1, -1, -1)

    def test_inverse_of_alpha(self, sqrt_field, cyc5_field):
        assert field_inverse(sqrt_field.alpha()).coeffs == _c(0, 10, 0, -1)
        assert field_inverse(cyc5_field.alpha()).coeffs == _c(-1, -1, -1, -1)

    def test_gaussian_norm(self, gaussian_field):
        one_plus_i = gaussian_field.element([1, 1])
        assert squared_norm(one_plus_i).coeffs == _c(2, 0)
        assert conjugate(one_plus_i).coeffs == _c(1, -1)


class TestClosedForms:
    def test_sqrt_inner(self, sqrt_field, random_element):
        for _ in range(100):
            a, b = random_element(sqrt_field), random_element(sqrt_field)
            assert list(inner_product(a, b).coeffs) == inner_closed_form_sqrt(a.coeffs, b.coeffs)

    def test_sqrt_squared_norm(self, sqrt_field, random_element):
        for _ in range(100):
            a = random_element(sqrt_field)
            assert list(squared_norm(a).coeffs) == squared_norm_closed_form_sqrt(a.coeffs)

    def test_cyclotomic5_inner(self, cyc5_field, random_element):
        for _ in range(100):
            a, b = random_element(cyc5_field), random_element(cyc5_field)
            assert list(inner_product(a, b).coeffs) == inner_closed_form_cyclotomic5(a.coeffs, b.coeffs)


def test_field_arith_accepts_op_names(sqrt_field):
    a, b = sqrt_field.element([1, 2, 3, 4]), sqrt_field.element([5, 6, 7, 8])
    assert field_arith("add", a, b).coeffs == _c(6, 8, 10, 12)
    assert field_arith(ArithOp.SUB, a, b).coeffs == _c(-4, -4, -4, -4)
    assert field_arith(ArithOp.DIV, a * b, b) == a


def test_division_by_zero(sqrt_field):
    with pytest.raises(DivisionByZeroError):
        sqrt_field.one() / sqrt_field.zero()
    with pytest.raises(ZeroDivisionError):
        field_inverse(sqrt_field.zero())


def test_mixing_fields_is_rejected(sqrt_field, cyc5_field):
    with pytest.raises(FieldMismatchError):
        sqrt_field.one() + cyc5_field.one()
    with pytest.raises(FieldMismatchError):
        inner_product(sqrt_field.one(), cyc5_field.one())


def test_wrong_length_is_rejected(sqrt_field):
    with pytest.raises(ValidationError):
        FieldElement(sqrt_field, [1, 2, 3])


def test_elements_are_immutable(sqrt_field):
    e = sqrt_field.one()
    with pytest.raises(AttributeError):
        e._coeffs = (0, 0, 0, 0)


def test_powers(cyc5_field, sqrt_field):
    alpha = cyc5_field.alpha()
    assert alpha ** 5 == cyc5_field.one()
    assert alpha ** 0 == cyc5_field.one()
    assert alpha ** -1 == field_inverse(alpha)
    assert sqrt_field.alpha() ** 4 == sqrt_field.element([-1, 0, 10, 0])


def test_orthogonal(gaussian_field):
    # <1, 1> = 1 is not zero, and no nonzero element is orthogonal to itself
    assert not orthogonal(gaussian_field.one(), gaussian_field.one())
    assert orthogonal(gaussian_field.one(), gaussian_field.zero())


def _check_axioms(field, random_element, samples):
    zero, one = field.zero(), field.one()
    for _ in range(samples):
        a, b, c = random_element(field), random_element(field), random_element(field)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a - a == zero
        if not a.is_zero():
            assert a * field_inverse(a) == one
            assert not squared_norm(a).is_zero()
        assert conjugate(conjugate(a)) == a
        assert conjugate(a * b) == conjugate(a) * conjugate(b)
        assert conjugate(a + b) == conjugate(a) + conjugate(b)
        assert inner_product(a, b) == conjugate(inner_product(b, a))
        assert inner_product(a + b, c) == inner_product(a, c) + inner_product(b, c)


def test_field_axioms(test_fields, random_element):
    for field in test_fields:
        _check_axioms(field, random_element, 30)


@pytest.mark.slow
def test_field_axioms_large_sample(test_fields, random_element):
    for field in test_fields:
        _check_axioms(field, random_element, 500)
