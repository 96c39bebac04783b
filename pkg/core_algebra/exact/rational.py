"""
Exact rational numbers.

``fractions.Fraction`` already keeps numerator/denominator in lowest terms with a
positive denominator and a unique zero (0/1), so it is used as the Rational type
directly. This module adds parsing, canonical formatting and the checked
four-operation dispatcher.
"""

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Union

from shared_utils.constants import ArithOp
from shared_utils.error_handler import DivisionByZeroError, ValidationError

Rational = Fraction
RationalLike = Union[Fraction, int, float, str, Decimal]

_UNICODE_MINUS = "−"


def parse_rational(value: RationalLike) -> Fraction:
    """Parse a value into an exact Rational.

    Accepts integers, Fractions, Decimals, strings such as ``"3"``, ``"-2/7"``,
    ``"0.125"`` or ``"1e-9"``, and binary floats. A float is taken as the exact
    dyadic rational it encodes, not its shortest decimal repr.

    Raises:
        ValidationError: If the value is non-finite or not a number
    """
    if isinstance(value, bool):
        raise ValidationError("booleans are not rationals", context={"value": str(value)})
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValidationError("non-finite component", context={"value": repr(value)})
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValidationError("non-finite component", context={"value": str(value)})
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace(_UNICODE_MINUS, "-")
        if not text:
            raise ValidationError("empty rational literal")
        try:
            if "/" in text:
                return Fraction(text)
            # Decimal parses scientific notation and flags nan/inf explicitly
            dec = Decimal(text)
        except (ValueError, ZeroDivisionError, InvalidOperation) as e:
            raise ValidationError(f"invalid rational literal: {value!r}", context={"value": value}) from e
        if not dec.is_finite():
            raise ValidationError("non-finite component", context={"value": value})
        return Fraction(dec)
    raise ValidationError(f"unsupported rational type {type(value).__name__}", context={"value": repr(value)})


def is_exact_literal(value: RationalLike) -> bool:
    """True for inputs that denote a rational exactly rather than a measurement.

    Integers, Fractions, integer strings and ``num/den`` strings are exact;
    decimal strings and floats are treated as real measurements.
    """
    if isinstance(value, bool):
        return False
    if isinstance(value, (int, Fraction)):
        return True
    if isinstance(value, str):
        text = value.strip().replace(_UNICODE_MINUS, "-")
        if "/" in text:
            return True
        digits = text[1:] if text[:1] in "+-" else text
        return digits.isdigit()
    return False


def format_rational(q: Fraction) -> str:
    """Canonical wire form: ``"num/den"``, or ``"num"`` when den = 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_arith(op: ArithOp, a: Fraction, b: Fraction) -> Fraction:
    """Exact add/sub/mul/div of two rationals.

    Raises:
        DivisionByZeroError: For div with b = 0
    """
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    if b == 0:
        raise DivisionByZeroError("rational division by zero", context={"dividend": format_rational(a)})
    return a / b
