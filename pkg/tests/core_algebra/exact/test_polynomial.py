import random
from fractions import Fraction

import mpmath
import pytest
import sympy

from core_algebra.exact.polynomial import RationalPoly, poly_arith, poly_div_rem, poly_eval, poly_ext_gcd
from shared_utils.constants import ArithOp
from shared_utils.error_handler import DivisionByZeroError, MathError, ValidationError

X = RationalPoly.x()
P1 = RationalPoly([1, 0, -10, 0, 1])


def _random_poly(rng: random.Random, max_degree: int = 8) -> RationalPoly:
    return RationalPoly(
        Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, max_degree) + 1)
    )


def test_trimming_and_degree():
    assert RationalPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert RationalPoly([0, 0]).is_zero()
    assert RationalPoly.zero().degree == -1
    assert P1.degree == 4
    assert P1.is_monic()


def test_immutable():
    with pytest.raises(AttributeError):
        P1._coeffs = ()


def test_str():
    assert str(P1) == "x^4 - 10*x^2 + 1"
    assert str(RationalPoly([-1, 1])) == "x - 1"
    assert str(RationalPoly([Fraction(1, 2), 0, -3])) == "-3*x^2 + 1/2"
    assert str(RationalPoly.zero()) == "0"


def test_poly_arith_examples():
    assert poly_arith(ArithOp.MUL, X + RationalPoly.one(), X - RationalPoly.one()) == RationalPoly([-1, 0, 1])
    x2 = RationalPoly.monomial(2)
    assert poly_arith(ArithOp.ADD, x2, -x2).is_zero()
    product = poly_arith(ArithOp.MUL, RationalPoly([1, 1, 1, 1]), RationalPoly([1, 1, -1, -1]))
    # (1 + x)^2 (1 - x^4)
    assert product == RationalPoly([1, 2, 1, 0, -1, -2, -1])


def test_poly_arith_rejects_div():
    with pytest.raises(ValidationError):
        poly_arith(ArithOp.DIV, X, X)


def test_poly_div_rem_examples():
    assert poly_div_rem(RationalPoly.monomial(4), P1) == (RationalPoly.one(), RationalPoly([-1, 0, 10]))
    assert poly_div_rem(RationalPoly([-1, 0, 1]), RationalPoly([-1, 1])) == (RationalPoly([1, 1]), RationalPoly.zero())
    assert poly_div_rem(X, RationalPoly([1, 0, 1])) == (RationalPoly.zero(), X)


def test_poly_div_by_zero():
    with pytest.raises(DivisionByZeroError):
        poly_div_rem(X, RationalPoly.zero())


def test_poly_ext_gcd_examples():
    g, u, v = poly_ext_gcd(X, RationalPoly([1, 0, 1]))
    assert g == RationalPoly.one()
    assert u == -X
    assert v == RationalPoly.one()

    a = RationalPoly([-1, 1])
    g, u, v = poly_ext_gcd(a, a)
    assert g == a
    assert u * a + v * a == g

    a = RationalPoly([1, 1, 1, 1])
    g, u, _ = poly_ext_gcd(a, P1)
    assert g == RationalPoly.one()
    assert poly_div_rem(u * a, P1)[1] == RationalPoly.one()


def test_poly_ext_gcd_monic_for_scaled_inputs():
    g, u, v = poly_ext_gcd(RationalPoly([-3, 3]), RationalPoly([-2, 0, 2]))
    assert g == RationalPoly([-1, 1])
    assert u * RationalPoly([-3, 3]) + v * RationalPoly([-2, 0, 2]) == g


def test_poly_ext_gcd_both_zero():
    with pytest.raises(MathError):
        poly_ext_gcd(RationalPoly.zero(), RationalPoly.zero())


def test_exact_evaluation():
    assert P1(0) == 1
    assert RationalPoly([-1, 0, 1])("1/2") == Fraction(-3, 4)


def test_derivative_and_monic():
    assert P1.derivative() == RationalPoly([0, -20, 0, 4])
    assert RationalPoly([2, 4]).monic() == RationalPoly([Fraction(1, 2), 1])


def test_poly_eval_examples():
    assert abs(poly_eval(RationalPoly([1, 0, 1]), mpmath.mpc(0, 1), 60)) < mpmath.mpf("1e-50")
    with mpmath.workdps(60):
        alpha = mpmath.sqrt(2) + mpmath.sqrt(3)
        assert abs(poly_eval(P1, alpha, 60)) < mpmath.mpf("1e-50")
    assert poly_eval(RationalPoly([5]), mpmath.mpc(2, 3), 60) == 5


def test_ring_axioms_random(rng):
    for _ in range(100):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.slow
def test_div_rem_and_bezout_random(rng):
    for _ in range(1000):
        a, b = _random_poly(rng), _random_poly(rng)
        if b.is_zero():
            continue
        q, r = poly_div_rem(a, b)
        assert q * b + r == a
        assert r.degree < b.degree
        g, u, v = poly_ext_gcd(a, b)
        assert u * a + v * b == g
        assert g.is_monic()


def test_gcd_matches_sympy(rng):
    x = sympy.Symbol("x")
    for _ in range(50):
        common = _random_poly(rng, 2)
        if common.is_zero():
            continue
        a, b = common * _random_poly(rng, 3), common * _random_poly(rng, 3)
        if a.is_zero() or b.is_zero():
            continue
        g, _, _ = poly_ext_gcd(a, b)
        expected = sympy.Poly(
            sympy.gcd(
                sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)], x),
                sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(b.coeffs)], x),
            ),
            x,
        ).monic()
        assert g == RationalPoly(Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs()))
