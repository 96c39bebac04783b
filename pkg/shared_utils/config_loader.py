from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator
from functools import lru_cache

from shared_utils.constants import Defaults, Environment, LogScope, Norm, QuantizerKind
from shared_utils.logging_utils import get_scoped_logger, LogLevel

logger = get_scoped_logger(LogScope.CONFIG)


class Settings(BaseSettings):
    """Application configuration with environment variable precedence.

    Precedence: 1) Environment Variables > 2) .env file > 3) Class defaults

    Every numeric knob of the library has a default so the CLI runs without
    any environment; overrides come from the environment.
    """
    # Application metadata
    app_name: str = "Real Vector Arithmetic"
    app_version: str = "1.0.0"
    environment: str = Environment.DEVELOPMENT.value

    # Logging
    log_level: str = Defaults.LOG_LEVEL
    log_format: str = Defaults.LOG_FORMAT

    # Numeric embedding oracle
    working_dps: int = Defaults.WORKING_DPS  # decimal digits for mpmath
    root_residual_tolerance: float = Defaults.ROOT_RESIDUAL_TOLERANCE
    newton_max_iterations: int = Defaults.NEWTON_MAX_ITERATIONS
    embedding_tolerance: float = Defaults.EMBEDDING_TOLERANCE

    # Epsilon quantization
    default_epsilon: str = Defaults.EPSILON  # parsed exactly, never as a float
    default_norm: Norm = Defaults.NORM
    default_quantizer: QuantizerKind = Defaults.QUANTIZER

    # Irreducibility verification
    irreducibility_prime_bound: int = Defaults.IRREDUCIBILITY_PRIME_BOUND

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=False, extra="ignore")

    @field_validator('environment')
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment is recognized."""
        valid_envs = {e.value for e in Environment}
        if v.lower() not in valid_envs:
            raise ValueError(f"environment must be one of {valid_envs}, got {v}")
        return v.lower()

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level name."""
        valid_levels = {lvl.value for lvl in LogLevel}
        if v.upper() not in valid_levels:
            raise ValueError(f"log_level must be one of {valid_levels}, got {v}")
        return v.upper()

    @field_validator('log_format')
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log renderer."""
        if v.lower() not in {"json", "console"}:
            raise ValueError(f"log_format must be 'json' or 'console', got {v}")
        return v.lower()

    @field_validator('working_dps')
    @classmethod
    def validate_working_dps(cls, v: int) -> int:
        """Working precision must leave headroom over the 1e-8 oracle tolerance."""
        if v < Defaults.MIN_WORKING_DPS:
            raise ValueError(f"working_dps must be >= {Defaults.MIN_WORKING_DPS}, got {v}")
        return v

    @field_validator('newton_max_iterations', 'irreducibility_prime_bound')
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator('root_residual_tolerance', 'embedding_tolerance')
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError(f"tolerance must lie in (0, 1), got {v}")
        return v


@lru_cache()
def get_settings() -> Settings:
    """Load and cache application settings.

    Returns:
        Validated Settings instance

    Raises:
        pydantic.ValidationError: If a setting is invalid
    """
    settings = Settings()

    logger.info(
        "configuration_loaded",
        environment=settings.environment,
        working_dps=settings.working_dps,
        default_epsilon=settings.default_epsilon,
        default_norm=settings.default_norm.value,
        default_quantizer=settings.default_quantizer.value
    )

    return settings
