"""
Field elements: m rational coefficients of 1, alpha, ..., alpha^(m-1).

Operations follow the quotient-ring view Q(alpha) = Q[x]/(p(x)):
add/sub are componentwise, mul is a polynomial product reduced by p,
inversion goes through the Bezout identity u*q + v*p = 1.
"""

from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Optional, Tuple

from core_algebra.exact.polynomial import RationalPoly, poly_div_rem, poly_eval, poly_ext_gcd
from core_algebra.exact.rational import RationalLike, format_rational, parse_rational
from shared_utils.constants import ArithOp, LogScope
from shared_utils.error_handler import DivisionByZeroError, FieldMismatchError
from shared_utils.logging_utils import ContextualLogger
from shared_utils.validation import InputValidator

if TYPE_CHECKING:
    from core_algebra.field.number_field import NumberField

logger = ContextualLogger(scope=LogScope.FIELD)


class FieldElement:
    """Immutable element q1 + q2*alpha + ... + qm*alpha^(m-1) of a NumberField."""

    __slots__ = ("_coeffs", "_field")

    def __init__(self, field: "NumberField", coeffs: Iterable[RationalLike]):
        values = tuple(parse_rational(c) for c in coeffs)
        InputValidator.validate_length(values, field.degree, "field element")
        object.__setattr__(self, "_coeffs", values)
        object.__setattr__(self, "_field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def from_poly(cls, field: "NumberField", poly: RationalPoly) -> "FieldElement":
        """Reduce an arbitrary polynomial in alpha modulo the minimal polynomial."""
        if poly.degree >= field.degree:
            poly = poly_div_rem(poly, field.min_poly)[1]
        return cls(field, poly.padded(field.degree))

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def field(self) -> "NumberField":
        return self._field

    def to_poly(self) -> RationalPoly:
        return RationalPoly(self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def scale(self, c: RationalLike) -> "FieldElement":
        c = parse_rational(c)
        return FieldElement(self._field, (q * c for q in self._coeffs))

    def inverse(self) -> "FieldElement":
        return field_inverse(self)

    def conjugate(self) -> "FieldElement":
        return conjugate(self)

    def inner(self, other: "FieldElement") -> "FieldElement":
        return inner_product(self, other)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self._field, (-q for q in self._coeffs))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(ArithOp.ADD, self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(ArithOp.SUB, self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(ArithOp.MUL, self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return field_arith(ArithOp.DIV, self, other)

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else field_inverse(self)
        n = abs(exponent)
        result = self._field.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._field == other._field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._field, self._coeffs))

    def __repr__(self) -> str:
        return f"FieldElement([{', '.join(format_rational(c) for c in self._coeffs)}])"


def _same_field(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatchError(
            context={"left": str(a.field.min_poly), "right": str(b.field.min_poly)}
        )


def field_arith(op: ArithOp, a: FieldElement, b: FieldElement) -> FieldElement:
    """The four arithmetics of Q(alpha) on coefficient vectors.

    Raises:
        FieldMismatchError: If a and b live in different fields
        DivisionByZeroError: For div by the zero element
    """
    op = ArithOp(op)
    _same_field(a, b)
    field = a.field
    if op is ArithOp.ADD:
        return FieldElement(field, (x + y for x, y in zip(a.coeffs, b.coeffs)))
    if op is ArithOp.SUB:
        return FieldElement(field, (x - y for x, y in zip(a.coeffs, b.coeffs)))
    if op is ArithOp.MUL:
        return FieldElement.from_poly(field, a.to_poly() * b.to_poly())
    return field_arith(ArithOp.MUL, a, field_inverse(b))


def field_inverse(a: FieldElement) -> FieldElement:
    """Inverse via u*a + v*p = 1, i.e. a^-1 = u mod p.

    Raises:
        DivisionByZeroError: For the zero element, or a zero divisor when the
            minimal polynomial was accepted unverified and is in fact reducible
    """
    if a.is_zero():
        raise DivisionByZeroError("cannot invert the zero element")
    field = a.field
    g, u, _ = poly_ext_gcd(a.to_poly(), field.min_poly)
    if g.degree > 0:
        raise DivisionByZeroError(
            "element is a zero divisor; the minimal polynomial is reducible",
            context={"gcd": str(g), "element": repr(a)}
        )
    return FieldElement.from_poly(field, u)


def conjugate(a: FieldElement) -> FieldElement:
    """Substitute alpha -> alpha* in a and reduce.

    alpha* is alpha itself for a real alpha, -(1 + alpha + ... + alpha^(p-2))
    for a cyclotomic alpha, or the explicit polynomial of the field spec.
    """
    field = a.field
    if field.conjugation_is_identity:
        return a
    star = field.alpha_star_element
    acc = field.zero()
    for c in reversed(a.coeffs):
        acc = acc * star + field.constant(c)
    return acc


def inner_product(a: FieldElement, b: FieldElement) -> FieldElement:
    """<a, b> = a * conj(b), a field element rather than a real scalar."""
    _same_field(a, b)
    return field_arith(ArithOp.MUL, a, conjugate(b))


def squared_norm(a: FieldElement) -> FieldElement:
    return inner_product(a, a)


def orthogonal(a: FieldElement, b: FieldElement) -> bool:
    """Two vectors are orthogonal when their inner product is the zero element."""
    return inner_product(a, b).is_zero()


def embed_numeric(a: FieldElement, dps: Optional[int] = None):
    """Image of a under the embedding alpha -> numeric root (mpmath.mpc).

    Raises:
        ConvergenceError: If the field's numeric root cannot be computed
    """
    field = a.field
    root = field.numeric_root
    return poly_eval(a.to_poly(), root, dps or field.working_dps)
