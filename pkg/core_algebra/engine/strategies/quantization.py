from abc import ABC, abstractmethod
from fractions import Fraction

import sympy
from sympy.ntheory.continued_fraction import continued_fraction_convergents, continued_fraction_iterator

from shared_utils.constants import LogScope, QuantizerKind
from shared_utils.error_handler import ValidationError
from shared_utils.logging_utils import ContextualLogger

logger = ContextualLogger(scope=LogScope.QUANTIZE)


class QuantizationStrategy(ABC):
    """Abstract base class for per-component rational approximation.

    ``bound_sq`` is the squared per-component tolerance: a strategy must return q
    with (value - q)^2 < bound_sq, checked exactly.
    """

    kind: QuantizerKind

    @abstractmethod
    def approximate(self, value: Fraction, bound_sq: Fraction) -> Fraction:
        """Return a rational within the tolerance of ``value``."""
        pass


class DyadicQuantizer(QuantizationStrategy):
    """Round to the coarsest grid 2^-k with 2^-k below the tolerance."""

    kind = QuantizerKind.DYADIC

    @staticmethod
    def grid_exponent(bound_sq: Fraction) -> int:
        """Smallest k >= 0 with (2^-k)^2 < bound_sq."""
        k = 0
        while Fraction(1, 4 ** k) >= bound_sq:
            k += 1
        return k

    def approximate(self, value: Fraction, bound_sq: Fraction) -> Fraction:
        k = self.grid_exponent(bound_sq)
        scale = 2 ** k
        return Fraction(round(value * scale), scale)


class ContinuedFractionQuantizer(QuantizationStrategy):
    """First continued-fraction convergent within the tolerance (best approximation)."""

    kind = QuantizerKind.CONTINUED_FRACTION

    def approximate(self, value: Fraction, bound_sq: Fraction) -> Fraction:
        target = sympy.Rational(value.numerator, value.denominator)
        # the last convergent of a rational is the rational itself, so the loop ends
        for conv in continued_fraction_convergents(continued_fraction_iterator(target)):
            q = Fraction(int(conv.p), int(conv.q))
            if (value - q) ** 2 < bound_sq:
                return q
        return value


class QuantizerFactory:
    """Factory for creating quantization strategies."""

    _registry = {
        QuantizerKind.DYADIC: DyadicQuantizer,
        QuantizerKind.CONTINUED_FRACTION: ContinuedFractionQuantizer,
    }

    @staticmethod
    def create(kind: QuantizerKind) -> QuantizationStrategy:
        """Create the strategy for ``kind``.

        Raises:
            ValidationError: If the kind is unknown
        """
        try:
            strategy_cls = QuantizerFactory._registry[QuantizerKind(kind)]
        except (KeyError, ValueError) as e:
            raise ValidationError(f"Unknown quantizer: {kind}", context={"quantizer": str(kind)}) from e
        logger.debug("creating_quantizer", quantizer=strategy_cls.kind.value)
        return strategy_cls()
