from decimal import Decimal
from fractions import Fraction

import pytest

from core_algebra.exact.rational import format_rational, is_exact_literal, parse_rational, rat_arith
from shared_utils.constants import ArithOp
from shared_utils.error_handler import DivisionByZeroError, ValidationError


@pytest.mark.parametrize(
    "value, expected",
    [
        ("3", Fraction(3)),
        ("-2/7", Fraction(-2, 7)),
        ("4/6", Fraction(2, 3)),
        ("0.125", Fraction(1, 8)),
        ("1e-9", Fraction(1, 10 ** 9)),
        ("−5", Fraction(-5)),
        (7, Fraction(7)),
        (0.5, Fraction(1, 2)),
        (Decimal("0.1"), Fraction(1, 10)),
        (Fraction(3, 4), Fraction(3, 4)),
    ],
)
def test_parse_rational(value, expected):
    assert parse_rational(value) == expected


def test_parse_float_is_exact_dyadic():
    # 0.1 as a binary float is not 1/10
    q = parse_rational(0.1)
    assert q != Fraction(1, 10)
    assert q.denominator == 2 ** 55


@pytest.mark.parametrize("value", ["", "abc", "1/0", "nan", "inf", float("inf"), float("nan"), True, None])
def test_parse_rational_rejects(value):
    with pytest.raises(ValidationError):
        parse_rational(value)


def test_canonical_form():
    q = parse_rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    zero = parse_rational("0/5")
    assert (zero.numerator, zero.denominator) == (0, 1)


def test_is_exact_literal():
    assert is_exact_literal(3)
    assert is_exact_literal("-12")
    assert is_exact_literal("2/7")
    assert is_exact_literal(Fraction(1, 3))
    assert not is_exact_literal("0.5")
    assert not is_exact_literal("1e-3")
    assert not is_exact_literal(0.5)


def test_format_rational():
    assert format_rational(Fraction(12)) == "12"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert format_rational(Fraction(0)) == "0"


def test_rat_arith_examples():
    assert rat_arith(ArithOp.ADD, Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert rat_arith(ArithOp.MUL, Fraction(0), Fraction(7, 5)) == Fraction(0)
    assert rat_arith(ArithOp.DIV, Fraction(3, 4), Fraction(3, 4)) == Fraction(1)
    assert rat_arith("sub", Fraction(1), Fraction(1, 4)) == Fraction(3, 4)


def test_rat_arith_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        rat_arith(ArithOp.DIV, Fraction(1), Fraction(0))
