"""
Structured error handling and response formatting.
Provides consistent error payloads with error codes, context and exit codes.
"""

from typing import Optional, Dict, Any
import logging

from shared_utils.constants import ErrorCode, ExitCode, LogScope
from shared_utils.logging_utils import get_scoped_logger


class AppException(Exception):
    """Base exception for application errors."""

    def __init__(
        self,
        error_code: str,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        exit_code: int = ExitCode.FAILURE
    ):
        self.error_code = error_code
        self.message = message
        self.context = context or {}
        self.exit_code = int(exit_code)
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to response dictionary."""
        return {
            "error": {
                "code": self.error_code,
                "message": self.message,
                "context": self.context
            }
        }


class ValidationError(AppException):
    """Validation/input error."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(
            error_code=ErrorCode.INVALID_INPUT.value,
            message=message,
            context=context,
            exit_code=ExitCode.PARSE_ERROR
        )


class ConfigurationError(AppException):
    """Configuration error."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(
            error_code=ErrorCode.INVALID_CONFIG.value,
            message=message,
            context=context,
            exit_code=ExitCode.PARSE_ERROR
        )


class MathError(AppException, ArithmeticError):
    """Arithmetic failure inside an exact computation."""

    def __init__(
        self,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        error_code: str = ErrorCode.MATH_ERROR.value
    ):
        super().__init__(
            error_code=error_code,
            message=message,
            context=context,
            exit_code=ExitCode.MATH_ERROR
        )


class DivisionByZeroError(MathError, ZeroDivisionError):
    """Division by (or inversion of) a zero rational, polynomial or field element."""

    def __init__(self, message: str = "division by zero", context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context, error_code=ErrorCode.DIVISION_BY_ZERO.value)


class SingularMatrixError(MathError):
    """No nonzero pivot exists in some column."""

    def __init__(self, message: str = "matrix is singular", context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context, error_code=ErrorCode.SINGULAR_MATRIX.value)


class FieldMismatchError(MathError):
    """Operands belong to different number fields."""

    def __init__(self, message: str = "operands belong to different fields", context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context, error_code=ErrorCode.FIELD_MISMATCH.value)


class ConvergenceError(MathError):
    """Iterative numeric routine exhausted its iteration cap."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context, error_code=ErrorCode.NO_CONVERGENCE.value)


class FieldValidationError(AppException):
    """Minimal polynomial or conjugation spec does not define a usable field."""

    def __init__(
        self,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        error_code: str = ErrorCode.FIELD_INVALID.value
    ):
        super().__init__(
            error_code=error_code,
            message=message,
            context=context,
            exit_code=ExitCode.FIELD_ERROR
        )


class ReduciblePolynomialError(FieldValidationError):
    """A nontrivial factor of the candidate minimal polynomial was found."""

    def __init__(self, message: str, factor: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(
            message,
            context={**(context or {}), "factor": factor},
            error_code=ErrorCode.REDUCIBLE_POLYNOMIAL.value
        )
        self.factor = factor


class IrreducibilityUnverifiedError(FieldValidationError):
    """Every irreducibility check was inconclusive and no waiver was given."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context, error_code=ErrorCode.IRREDUCIBILITY_UNVERIFIED.value)


def log_exception(
    exc: Exception,
    scope: str = LogScope.ERROR_HANDLER,
    logger: Optional[logging.Logger] = None
) -> None:
    """Log exception with structured context.

    Args:
        exc: Exception to log
        scope: Log scope identifier
        logger: Optional custom logger (uses structlog if not provided)
    """
    if logger is None:
        logger = get_scoped_logger(scope)

    if isinstance(exc, AppException):
        logger.error(
            "app_exception",
            error_code=exc.error_code,
            message=exc.message,
            exit_code=exc.exit_code,
            context=exc.context
        )
    else:
        logger.error(
            "unexpected_exception",
            error_type=type(exc).__name__,
            message=str(exc),
            traceback=True
        )


def handle_error(
    exc: Exception,
    scope: str = LogScope.ERROR_HANDLER,
    default_error_code: str = ErrorCode.INTERNAL_ERROR.value
) -> Dict[str, Any]:
    """Handle exception and return structured error response.

    Args:
        exc: Exception to handle
        scope: Log scope
        default_error_code: Default error code for non-AppException errors

    Returns:
        Structured error response dictionary
    """
    log_exception(exc, scope)

    if isinstance(exc, AppException):
        return exc.to_dict()
    # Convert unexpected exceptions to structured format
    return {
        "error": {
            "code": default_error_code,
            "message": f"An unexpected error occurred: {str(exc)}",
            "context": {"error_type": type(exc).__name__}
        }
    }


def exit_code_for(exc: Exception) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(exc, AppException):
        return exc.exit_code
    return int(ExitCode.FAILURE)
