from core_algebra.engine.strategies.quantization import (
    ContinuedFractionQuantizer, DyadicQuantizer, QuantizationStrategy, QuantizerFactory,
)

__all__ = ["ContinuedFractionQuantizer", "DyadicQuantizer", "QuantizationStrategy", "QuantizerFactory"]
