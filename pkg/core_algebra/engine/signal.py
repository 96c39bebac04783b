"""
Finite-length vector-valued signals over a number field.

A VectorSignal holds L >= 1 field elements at indices start .. start+L-1 and is
the zero element everywhere else. The inner product and convolution both
conjugate their second argument:

    <s1, s2>      = sum_l s1(l) * conj(s2(l))
    (s1 * s2)(n)  = sum_k s1(k) * conj(s2(n - k))
"""

from typing import Iterable, List, Optional, Sequence

from core_algebra.exact.rational import RationalLike
from core_algebra.field.element import FieldElement, conjugate
from core_algebra.field.number_field import NumberField
from shared_utils.constants import LogScope
from shared_utils.error_handler import FieldMismatchError, ValidationError
from shared_utils.logging_utils import ContextualLogger, log_execution
from shared_utils.validation import InputValidator

logger = ContextualLogger(scope=LogScope.SIGNAL)


class VectorSignal:
    """Immutable finite signal of field elements with an integer support offset."""

    __slots__ = ("_elements", "_start")

    def __init__(self, elements: Iterable[FieldElement], start: int = 0):
        values = tuple(elements)
        if not values:
            raise ValidationError("a signal needs at least one element")
        field = values[0].field
        for e in values[1:]:
            if e.field != field:
                raise FieldMismatchError(
                    "signal elements belong to different fields",
                    context={"left": str(field.min_poly), "right": str(e.field.min_poly)},
                )
        object.__setattr__(self, "_elements", values)
        object.__setattr__(self, "_start", int(start))

    def __setattr__(self, name, value):
        raise AttributeError("VectorSignal is immutable")

    @classmethod
    def from_coeffs(
        cls, field: NumberField, rows: Iterable[Iterable[RationalLike]], start: int = 0
    ) -> "VectorSignal":
        return cls((FieldElement(field, row) for row in rows), start)

    @classmethod
    def zeros(cls, field: NumberField, length: int, start: int = 0) -> "VectorSignal":
        InputValidator.validate_positive_int(length, "signal length")
        return cls([field.zero()] * length, start)

    @classmethod
    def impulse(cls, field: NumberField, length: int = 1, start: int = 0) -> "VectorSignal":
        """Unit impulse: the identity element at ``start`` followed by zeros."""
        InputValidator.validate_positive_int(length, "signal length")
        return cls([field.one()] + [field.zero()] * (length - 1), start)

    @property
    def elements(self) -> tuple:
        return self._elements

    @property
    def start(self) -> int:
        return self._start

    @property
    def end(self) -> int:
        """One past the last index of the support."""
        return self._start + len(self._elements)

    @property
    def field(self) -> NumberField:
        return self._elements[0].field

    def __len__(self) -> int:
        return len(self._elements)

    def at(self, n: int) -> FieldElement:
        """Value at index n; the zero element outside the support."""
        if self._start <= n < self.end:
            return self._elements[n - self._start]
        return self.field.zero()

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self._elements)

    def scale(self, a: FieldElement) -> "VectorSignal":
        """Multiply every sample by the field element a."""
        return VectorSignal((a * e for e in self._elements), self._start)

    def conjugate(self) -> "VectorSignal":
        return VectorSignal((conjugate(e) for e in self._elements), self._start)

    def _combine(self, other: "VectorSignal", negate: bool) -> "VectorSignal":
        _same_field(self, other)
        lo = min(self._start, other._start)
        hi = max(self.end, other.end)
        if negate:
            values = (self.at(n) - other.at(n) for n in range(lo, hi))
        else:
            values = (self.at(n) + other.at(n) for n in range(lo, hi))
        return VectorSignal(values, lo)

    def __add__(self, other: "VectorSignal") -> "VectorSignal":
        return self._combine(other, negate=False)

    def __sub__(self, other: "VectorSignal") -> "VectorSignal":
        return self._combine(other, negate=True)

    def __neg__(self) -> "VectorSignal":
        return VectorSignal((-e for e in self._elements), self._start)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorSignal):
            return NotImplemented
        return self._start == other._start and self._elements == other._elements

    def __hash__(self) -> int:
        return hash((self._start, self._elements))

    def __repr__(self) -> str:
        return f"VectorSignal(start={self._start}, length={len(self._elements)})"


def _same_field(s1: VectorSignal, s2: VectorSignal) -> None:
    if s1.field != s2.field:
        raise FieldMismatchError(
            context={"left": str(s1.field.min_poly), "right": str(s2.field.min_poly)}
        )


def signal_inner(s1: VectorSignal, s2: VectorSignal) -> FieldElement:
    """Sequence inner product sum_l s1(l) * conj(s2(l)).

    Signals with different supports are aligned by index; samples outside a
    support count as zero.
    """
    _same_field(s1, s2)
    acc = s1.field.zero()
    for n in range(max(s1.start, s2.start), min(s1.end, s2.end)):
        acc = acc + s1.at(n) * conjugate(s2.at(n))
    return acc


def signal_norm(s: VectorSignal) -> FieldElement:
    return signal_inner(s, s)


def signals_orthogonal(s1: VectorSignal, s2: VectorSignal) -> bool:
    return signal_inner(s1, s2).is_zero()


@log_execution(scope=LogScope.SIGNAL, level="debug")
def convolve(s1: VectorSignal, s2: VectorSignal) -> VectorSignal:
    """Convolution with the second signal conjugated.

    The output has length L1 + L2 - 1 and starts at s1.start + s2.start.

    Raises:
        FieldMismatchError: If the signals live in different fields
    """
    _same_field(s1, s2)
    field = s1.field
    e1 = s1.elements
    c2 = [conjugate(e) for e in s2.elements]
    n1, n2 = len(e1), len(c2)
    out: List[FieldElement] = []
    for i in range(n1 + n2 - 1):
        acc = field.zero()
        for j in range(max(0, i - n2 + 1), min(i, n1 - 1) + 1):
            acc = acc + e1[j] * c2[i - j]
        out.append(acc)
    return VectorSignal(out, s1.start + s2.start)


def filter_signal(h: VectorSignal, s: VectorSignal) -> VectorSignal:
    """Linear filtering of s by the impulse response h."""
    return convolve(h, s)


@log_execution(scope=LogScope.SIGNAL, level="debug")
def gram_schmidt(signals: Sequence[VectorSignal]) -> List[VectorSignal]:
    """Classical Gram-Schmidt under ``signal_inner``.

    An input in the span of its predecessors yields the zero signal in its slot.
    A nonzero output whose norm is the zero element is returned as is and
    later inputs are not projected onto it.

    Raises:
        FieldMismatchError: Inputs from different fields
        ValidationError: Inputs with different lengths or supports
    """
    signals = list(signals)
    if not signals:
        return []
    first = signals[0]
    for s in signals[1:]:
        _same_field(first, s)
        if len(s) != len(first) or s.start != first.start:
            raise ValidationError(
                "gram_schmidt needs signals with one common support",
                context={"expected": [first.start, len(first)], "got": [s.start, len(s)]},
            )

    basis: List[VectorSignal] = []
    norms: List[Optional[FieldElement]] = []
    for u in signals:
        v = u
        for w, w_norm in zip(basis, norms):
            if w_norm is None:
                continue
            coeff = signal_inner(u, w) / w_norm
            if not coeff.is_zero():
                v = v - w.scale(coeff)
        basis.append(v)
        norm = None if v.is_zero() else signal_norm(v)
        if norm is not None and norm.is_zero():
            logger.warning("isotropic_signal_skipped", index=len(basis) - 1)
            norm = None
        norms.append(norm)

    logger.debug(
        "gram_schmidt_done",
        inputs=len(signals),
        zero_outputs=sum(1 for b in basis if b.is_zero()),
    )
    return basis
