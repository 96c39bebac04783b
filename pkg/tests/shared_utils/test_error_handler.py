import pytest

from shared_utils.constants import ErrorCode, ExitCode
from shared_utils.error_handler import (
    AppException, ConvergenceError, DivisionByZeroError, FieldMismatchError, FieldValidationError,
    IrreducibilityUnverifiedError, MathError, ReduciblePolynomialError, SingularMatrixError,
    ValidationError, exit_code_for, handle_error,
)


def test_to_dict_payload():
    exc = ValidationError("bad vector", context={"value": "[1,"})
    assert exc.to_dict() == {
        "error": {"code": "INVALID_INPUT", "message": "bad vector", "context": {"value": "[1,"}}
    }


@pytest.mark.parametrize(
    "exc, code",
    [
        (ValidationError("x"), ExitCode.PARSE_ERROR),
        (DivisionByZeroError(), ExitCode.MATH_ERROR),
        (SingularMatrixError(), ExitCode.MATH_ERROR),
        (FieldMismatchError(), ExitCode.MATH_ERROR),
        (ConvergenceError("x"), ExitCode.MATH_ERROR),
        (FieldValidationError("x"), ExitCode.FIELD_ERROR),
        (ReduciblePolynomialError("x", factor="x - 1"), ExitCode.FIELD_ERROR),
        (IrreducibilityUnverifiedError("x"), ExitCode.FIELD_ERROR),
        (RuntimeError("boom"), ExitCode.FAILURE),
    ],
)
def test_exit_codes(exc, code):
    assert exit_code_for(exc) == code


def test_division_by_zero_is_catchable_as_builtin():
    with pytest.raises(ZeroDivisionError):
        raise DivisionByZeroError()
    assert isinstance(DivisionByZeroError(), MathError)
    assert isinstance(DivisionByZeroError(), ArithmeticError)


def test_singular_message_mentions_singular():
    assert "singular" in SingularMatrixError().message
    assert SingularMatrixError().error_code == ErrorCode.SINGULAR_MATRIX.value


def test_reducible_error_carries_factor():
    exc = ReduciblePolynomialError("reducible", factor="x - 1", context={"min_poly": "x^2 - 1"})
    assert exc.factor == "x - 1"
    assert exc.context == {"min_poly": "x^2 - 1", "factor": "x - 1"}


def test_handle_error_app_exception():
    payload = handle_error(FieldMismatchError())
    assert payload["error"]["code"] == "FIELD_MISMATCH"


def test_handle_error_unexpected_exception():
    payload = handle_error(KeyError("k"))
    assert payload["error"]["code"] == "INTERNAL_ERROR"
    assert payload["error"]["context"] == {"error_type": "KeyError"}
    assert isinstance(AppException("X", "m"), Exception)
