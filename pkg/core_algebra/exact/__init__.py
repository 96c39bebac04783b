from core_algebra.exact.polynomial import RationalPoly, poly_arith, poly_div_rem, poly_eval, poly_ext_gcd
from core_algebra.exact.rational import Rational, format_rational, parse_rational, rat_arith

__all__ = [
    "Rational",
    "RationalPoly",
    "format_rational",
    "parse_rational",
    "poly_arith",
    "poly_div_rem",
    "poly_eval",
    "poly_ext_gcd",
    "rat_arith",
]
