"""
Polynomials over the rationals.

Coefficients are stored in ascending power order (``coeffs[i]`` multiplies
``x**i``). Matlab-style code lists them descending; reverse on the way in.
"""

from fractions import Fraction
from typing import Iterable, Optional, Tuple

import mpmath

from core_algebra.exact.rational import RationalLike, format_rational, parse_rational
from shared_utils.config_loader import get_settings
from shared_utils.constants import ArithOp, LogScope
from shared_utils.error_handler import DivisionByZeroError, MathError, ValidationError
from shared_utils.logging_utils import ContextualLogger

logger = ContextualLogger(scope=LogScope.EXACT)


def _trim(coeffs: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalPoly:
    """Immutable polynomial with Rational coefficients, leading zeros trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "_coeffs", _trim(parse_rational(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "RationalPoly":
        if degree < 0:
            raise ValidationError("monomial degree must be >= 0", context={"degree": degree})
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def padded(self, length: int) -> Tuple[Fraction, ...]:
        """Coefficients padded with zeros to ``length`` entries."""
        if len(self._coeffs) > length:
            raise ValidationError(
                f"polynomial of degree {self.degree} does not fit in {length} coefficients"
            )
        return self._coeffs + (Fraction(0),) * (length - len(self._coeffs))

    def scale(self, c: RationalLike) -> "RationalPoly":
        c = parse_rational(c)
        return RationalPoly(a * c for a in self._coeffs)

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            raise DivisionByZeroError("the zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def __call__(self, value: RationalLike) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        v = parse_rational(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self._coeffs)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPoly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    def __divmod__(self, other: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        return poly_div_rem(self, other)

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return poly_div_rem(self, other)[1]

    def __floordiv__(self, other: "RationalPoly") -> "RationalPoly":
        return poly_div_rem(self, other)[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag.numerator}*{power}"
                else:
                    body = f"({format_rational(mag)})*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_arith(op: ArithOp, a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Exact add/sub/mul of two polynomials; the result is trimmed."""
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    raise ValidationError("polynomial division has no exact ring result; use poly_div_rem")


def poly_div_rem(a: RationalPoly, b: RationalPoly) -> Tuple[RationalPoly, RationalPoly]:
    """Long division: returns (q, r) with a = q*b + r and deg r < deg b.

    Raises:
        DivisionByZeroError: If b is the zero polynomial
    """
    if b.is_zero():
        raise DivisionByZeroError("polynomial division by zero", context={"dividend": str(a)})
    rem = list(a.coeffs)
    db = b.degree
    if a.degree < db:
        return RationalPoly.zero(), a
    quot = [Fraction(0)] * (a.degree - db + 1)
    lead = b.leading
    bc = b.coeffs
    for k in range(a.degree - db, -1, -1):
        c = rem[k + db] / lead
        quot[k] = c
        if c == 0:
            continue
        for j in range(db + 1):
            rem[k + j] -= c * bc[j]
    return RationalPoly(quot), RationalPoly(rem[:db])


def poly_ext_gcd(a: RationalPoly, b: RationalPoly) -> Tuple[RationalPoly, RationalPoly, RationalPoly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g and g monic.

    Coprime inputs give g = 1, so u is the inverse of a modulo b.

    Raises:
        MathError: If both a and b are zero
    """
    if a.is_zero() and b.is_zero():
        raise MathError("gcd of two zero polynomials is undefined")

    r0, r1 = a, b
    s0, s1 = RationalPoly.one(), RationalPoly.zero()
    t0, t1 = RationalPoly.zero(), RationalPoly.one()
    steps = 0
    while not r1.is_zero():
        q, r = poly_div_rem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        steps += 1

    inv_lead = 1 / r0.leading
    g, u, v = r0.scale(inv_lead), s0.scale(inv_lead), t0.scale(inv_lead)
    logger.debug("poly_ext_gcd_done", steps=steps, gcd_degree=g.degree)
    return g, u, v


def _to_mpf(c: Fraction):
    return mpmath.mpf(c.numerator) / c.denominator


def poly_eval(a: RationalPoly, z, dps: Optional[int] = None):
    """Horner evaluation at a complex point in high precision.

    Args:
        a: Polynomial to evaluate
        z: Complex point (anything mpmath accepts)
        dps: Working precision in decimal digits; defaults to the configured one

    Returns:
        mpmath.mpc value
    """
    if dps is None:
        dps = get_settings().working_dps
    with mpmath.workdps(dps):
        if a.is_zero():
            return mpmath.mpc(0)
        desc = [_to_mpf(c) for c in reversed(a.coeffs)]
        return mpmath.mpc(mpmath.polyval(desc, mpmath.mpmathify(z)))
