"""
Input validation utilities.
Checks shared by the codecs, the library entry points and the CLI.
"""

from fractions import Fraction
from pathlib import Path
from typing import Sequence, TypeVar

from shared_utils.error_handler import ValidationError

T = TypeVar("T")


class InputValidator:
    """Utility class for input validation."""

    @staticmethod
    def validate_positive_int(value: int, field_name: str, allow_zero: bool = False) -> int:
        """Validate positive integer.

        Args:
            value: Integer to validate
            field_name: Name of field for error messages
            allow_zero: Whether zero is valid

        Returns:
            Validated integer

        Raises:
            ValidationError: If validation fails
        """
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(f"{field_name} must be an integer")

        min_val = 0 if allow_zero else 1
        if value < min_val:
            raise ValidationError(f"{field_name} must be >= {min_val}")

        return value

    @staticmethod
    def validate_positive_rational(value: Fraction, field_name: str) -> Fraction:
        """Validate a strictly positive exact tolerance such as epsilon."""
        if value <= 0:
            raise ValidationError(f"{field_name} must be > 0", context={field_name: str(value)})
        return value

    @staticmethod
    def validate_length(values: Sequence[T], expected: int, field_name: str) -> Sequence[T]:
        """Validate that a coefficient list matches the field degree.

        Raises:
            ValidationError: If the length differs
        """
        if len(values) != expected:
            raise ValidationError(
                f"{field_name} must have exactly {expected} components, got {len(values)}",
                context={"expected": expected, "actual": len(values)}
            )
        return values

