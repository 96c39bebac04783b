"""
Irreducibility verification for candidate minimal polynomials over Q.

Strategy:
  1. rational-root test (always) - complete for degree 2 and 3;
  2. monic quadratic-factor search (degree 4) - together with 1 complete for degree 4;
  3. irreducibility modulo a small prime (degree >= 5) - sufficient, not necessary.
A reducible polynomial raises ReduciblePolynomialError carrying the factor;
a polynomial no check can settle yields ``IrreducibilityVerdict.INCONCLUSIVE``.
"""

import math
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy

from core_algebra.exact.polynomial import RationalPoly
from shared_utils.constants import LogScope
from shared_utils.error_handler import ReduciblePolynomialError
from shared_utils.logging_utils import ContextualLogger

logger = ContextualLogger(scope=LogScope.FIELD)


class IrreducibilityVerdict(str, Enum):
    IRREDUCIBLE = "irreducible"
    INCONCLUSIVE = "inconclusive"


def _denominator_lcm(poly: RationalPoly) -> int:
    return math.lcm(*(c.denominator for c in poly.coeffs))


def integral_monic_form(poly: RationalPoly) -> Tuple[List[int], int]:
    """Rescale a monic rational polynomial to a monic integer one.

    With d the lcm of the coefficient denominators, q(y) = d^n p(y/d) is monic
    with integer coefficients and factors exactly as p does (x = y/d).

    Returns:
        (ascending integer coefficients of q, d)
    """
    d = _denominator_lcm(poly)
    n = poly.degree
    coeffs = [poly.coeff(k) * d ** (n - k) for k in range(n + 1)]
    return [int(c) for c in coeffs], d


def _divisors(n: int) -> List[int]:
    return [int(v) for v in sympy.divisors(abs(n))]


def find_rational_root(poly: RationalPoly) -> Optional[Fraction]:
    """Exhaustive rational-root test on a monic polynomial."""
    q, d = integral_monic_form(poly)
    if q[0] == 0:
        return Fraction(0)
    # q is monic with integer coefficients, so rational roots are integer divisors of q(0)
    for r in _divisors(q[0]):
        for cand in (r, -r):
            if RationalPoly(q)(cand) == 0:
                return Fraction(cand, d)
    return None


def find_quadratic_factor(poly: RationalPoly) -> Optional[RationalPoly]:
    """Search a monic quartic for a monic quadratic factor over Q.

    Works on the integral monic form q = y^4 + q3 y^3 + q2 y^2 + q1 y + q0, whose
    monic factors over Q have integer coefficients:
    q = (y^2 + a y + b)(y^2 + c y + e).
    """
    if poly.degree != 4:
        return None
    q, d = integral_monic_form(poly)
    q0, q1, q2, q3 = q[0], q[1], q[2], q[3]
    if q0 == 0:
        return None  # rational root 0, found by the root test
    for bb in _divisors(q0):
        for b in (bb, -bb):
            e = q0 // b
            if b != e:
                num = q1 - b * q3
                den = e - b
                if num % den:
                    continue
                a = num // den
                c = q3 - a
                if b + e + a * c != q2:
                    continue
                candidates = [(a, c)]
            else:
                if b * q3 != q1:
                    continue
                # a + c = q3, a*c = q2 - 2b
                disc = q3 * q3 - 4 * (q2 - 2 * b)
                if disc < 0 or math.isqrt(disc) ** 2 != disc:
                    continue
                root = math.isqrt(disc)
                if (q3 + root) % 2:
                    continue
                a = (q3 + root) // 2
                candidates = [(a, q3 - a)]
            for a, _ in candidates:
                # back to x = y/d: y^2 + a y + b  ->  x^2 + (a/d) x + b/d^2
                return RationalPoly([Fraction(b, d * d), Fraction(a, d), 1])
    return None


def _mod_prime_coeffs(poly: RationalPoly, prime: int) -> Optional[List[int]]:
    out = []
    for c in poly.coeffs:
        if c.denominator % prime == 0:
            return None
        out.append(c.numerator * pow(c.denominator, -1, prime) % prime)
    return out


def irreducible_mod_some_prime(poly: RationalPoly, prime_bound: int) -> Optional[int]:
    """Return a prime p for which poly mod p is irreducible over GF(p), if any.

    A monic polynomial irreducible modulo a prime not dividing any denominator
    is irreducible over Q.
    """
    x = sympy.Symbol("x")
    for prime in sympy.primerange(2, prime_bound + 1):
        coeffs = _mod_prime_coeffs(poly, prime)
        if coeffs is None:
            continue
        reduced = sympy.Poly(list(reversed(coeffs)), x, modulus=prime)
        if reduced.degree() == poly.degree and reduced.is_irreducible:
            return int(prime)
    return None


def check_irreducible(poly: RationalPoly, prime_bound: int) -> IrreducibilityVerdict:
    """Run the verification ladder on a monic polynomial of degree >= 2.

    Raises:
        ReduciblePolynomialError: With the factor found
    """
    root = find_rational_root(poly)
    if root is not None:
        factor = RationalPoly([-root, 1])
        raise ReduciblePolynomialError(
            f"minimal polynomial {poly} is reducible: rational root {root}",
            factor=str(factor),
            context={"min_poly": str(poly)}
        )
    if poly.degree <= 3:
        return IrreducibilityVerdict.IRREDUCIBLE

    if poly.degree == 4:
        quad = find_quadratic_factor(poly)
        if quad is not None:
            raise ReduciblePolynomialError(
                f"minimal polynomial {poly} is reducible: quadratic factor {quad}",
                factor=str(quad),
                context={"min_poly": str(poly)}
            )
        return IrreducibilityVerdict.IRREDUCIBLE

    prime = irreducible_mod_some_prime(poly, prime_bound)
    if prime is not None:
        logger.debug("irreducible_mod_prime", prime=prime, degree=poly.degree)
        return IrreducibilityVerdict.IRREDUCIBLE
    logger.warning("irreducibility_inconclusive", min_poly=str(poly), prime_bound=prime_bound)
    return IrreducibilityVerdict.INCONCLUSIVE
