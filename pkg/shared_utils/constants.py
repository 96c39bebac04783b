"""
Constants management.
Centralized configuration for all magic values, enums and defaults.
"""

from enum import Enum, IntEnum
from typing import Final


class Environment(str, Enum):
    """Application environment."""
    DEVELOPMENT = "development"
    STAGING = "staging"
    PRODUCTION = "production"


class ArithOp(str, Enum):
    """The four arithmetics shared by rationals, field elements and real vectors."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Norm(str, Enum):
    """Vector norms accepted by the epsilon quantizer."""
    L2 = "l2"
    LINF = "linf"


class QuantizerKind(str, Enum):
    """Rational approximation strategies."""
    DYADIC = "dyadic"
    CONTINUED_FRACTION = "cf"


class ConjugationKind(str, Enum):
    """How alpha* is obtained for a number field."""
    REAL = "real"
    CYCLOTOMIC = "cyclotomic"
    EXPLICIT = "explicit"


class OutputFormat(str, Enum):
    """CLI output serialization."""
    JSON = "json"
    TABLE = "table"


class CoefficientOrder(str, Enum):
    """Coefficient order of vectors on the wire."""
    ASC = "asc"
    DESC = "desc"


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""
    SUCCESS = 0
    FAILURE = 1
    PARSE_ERROR = 2
    MATH_ERROR = 3
    FIELD_ERROR = 4


# Default values
class Defaults:
    """Defaults for numeric and quantization settings."""
    WORKING_DPS: Final[int] = 60  # embedding oracle needs headroom beyond 1e-8
    MIN_WORKING_DPS: Final[int] = 30
    ROOT_RESIDUAL_TOLERANCE: Final[float] = 1e-40
    NEWTON_MAX_ITERATIONS: Final[int] = 200
    EMBEDDING_TOLERANCE: Final[float] = 1e-8
    EPSILON: Final[str] = "1e-9"
    NORM: Final[Norm] = Norm.LINF
    QUANTIZER: Final[QuantizerKind] = QuantizerKind.DYADIC
    IRREDUCIBILITY_PRIME_BOUND: Final[int] = 200
    LOG_LEVEL: Final[str] = "WARNING"
    LOG_FORMAT: Final[str] = "json"
    DISPLAY_DIGITS: Final[int] = 11


# Logging scopes
class LogScope:
    """Standardized logging scope names."""
    CONFIG = "config_loader"
    EXACT = "exact_arith"
    FIELD = "number_field"
    QUANTIZE = "epsilon_quantize"
    SIGNAL = "vector_signal"
    LINEAR = "linear_solve"
    CODEC = "codec"
    DEMO = "demo"
    CLI = "cli"
    VALIDATION = "validation"
    ERROR_HANDLER = "error_handler"


# Error codes
class ErrorCode(str, Enum):
    """Standardized error codes for consistency."""
    INVALID_CONFIG = "INVALID_CONFIG"
    INVALID_INPUT = "INVALID_INPUT"
    MATH_ERROR = "MATH_ERROR"
    DIVISION_BY_ZERO = "DIVISION_BY_ZERO"
    SINGULAR_MATRIX = "SINGULAR_MATRIX"
    FIELD_MISMATCH = "FIELD_MISMATCH"
    NO_CONVERGENCE = "NO_CONVERGENCE"
    FIELD_INVALID = "FIELD_INVALID"
    REDUCIBLE_POLYNOMIAL = "REDUCIBLE_POLYNOMIAL"
    IRREDUCIBILITY_UNVERIFIED = "IRREDUCIBILITY_UNVERIFIED"
    INTERNAL_ERROR = "INTERNAL_ERROR"
