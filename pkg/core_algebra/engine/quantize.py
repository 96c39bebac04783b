"""
Epsilon-range rational approximation of real vectors and epsilon-arithmetic.

A real vector r is replaced by a rational vector q with ||r - q|| < epsilon in the
configured norm; exact components (integers, "num/den" strings, Fractions) pass
through unchanged. Binary floats are read as the dyadic rationals they encode.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from core_algebra.engine.strategies.quantization import QuantizerFactory
from core_algebra.exact.rational import RationalLike, is_exact_literal, parse_rational
from core_algebra.field.element import FieldElement, field_arith
from core_algebra.field.number_field import NumberField
from core_algebra.schemas.models import EpsilonConfig
from shared_utils.constants import ArithOp, LogScope, Norm
from shared_utils.error_handler import DivisionByZeroError
from shared_utils.logging_utils import ContextualLogger
from shared_utils.validation import InputValidator

logger = ContextualLogger(scope=LogScope.QUANTIZE)


class RealComponent(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction
    exact: bool


class RealVector(BaseModel):
    """An m-vector of reals, each held as the exact rational it was given as."""
    model_config = ConfigDict(frozen=True)

    components: Tuple[RealComponent, ...]

    @classmethod
    def parse(cls, values: Iterable[RationalLike]) -> "RealVector":
        """Parse decimal/rational strings, ints, Fractions or floats.

        Raises:
            ValidationError: On a non-finite or malformed component
        """
        return cls(components=tuple(
            RealComponent(value=parse_rational(v), exact=is_exact_literal(v)) for v in values
        ))

    def __len__(self) -> int:
        return len(self.components)

    @property
    def values(self) -> List[Fraction]:
        return [c.value for c in self.components]


def component_bound_sq(cfg: EpsilonConfig, m: int) -> Fraction:
    """Squared per-component tolerance: eps^2 for Linf, eps^2/m for L2."""
    eps_sq = cfg.epsilon * cfg.epsilon
    if cfg.norm is Norm.L2:
        return eps_sq / m
    return eps_sq


def quantize(r: RealVector, cfg: EpsilonConfig) -> List[Fraction]:
    """Rational vector within epsilon of r in the configured norm.

    Args:
        r: Real vector
        cfg: Epsilon, norm and strategy

    Returns:
        List of Rationals, same length as r
    """
    InputValidator.validate_positive_rational(cfg.epsilon, "epsilon")
    if len(r) == 0:
        return []
    strategy = QuantizerFactory.create(cfg.strategy)
    bound_sq = component_bound_sq(cfg, len(r))
    out = [c.value if c.exact else strategy.approximate(c.value, bound_sq) for c in r.components]
    logger.debug(
        "quantized_vector",
        length=len(r),
        strategy=cfg.strategy.value,
        norm=cfg.norm.value,
        passthrough=sum(1 for c in r.components if c.exact),
    )
    return out


def within_epsilon(r: Sequence[Fraction], q: Sequence[Fraction], cfg: EpsilonConfig) -> bool:
    """Exact check of ||r - q|| < epsilon in the configured norm."""
    diffs = [a - b for a, b in zip(r, q)]
    eps = cfg.epsilon
    if cfg.norm is Norm.L2:
        return sum(d * d for d in diffs) < eps * eps
    return all(abs(d) < eps for d in diffs)


def epsilon_lift(r: RealVector, field: NumberField, cfg: EpsilonConfig) -> FieldElement:
    """Quantize r and map it to q1 + q2*alpha + ... + qm*alpha^(m-1)."""
    InputValidator.validate_length(r.components, field.degree, "real vector")
    return FieldElement(field, quantize(r, cfg))


def eps_arith(
    op: ArithOp,
    r1: RealVector,
    r2: RealVector,
    field: NumberField,
    cfg: EpsilonConfig,
) -> FieldElement:
    """r1 o r2 := q1 o q2 for the deterministic quantizations q1, q2.

    Raises:
        DivisionByZeroError: For div when r2 quantizes to the zero element
    """
    op = ArithOp(op)
    q1 = epsilon_lift(r1, field, cfg)
    q2 = epsilon_lift(r2, field, cfg)
    if op is ArithOp.DIV and q2.is_zero():
        raise DivisionByZeroError(
            "divisor lies in the epsilon range of zero and is treated as 0",
            context={"epsilon": str(cfg.epsilon)},
        )
    return field_arith(op, q1, q2)
