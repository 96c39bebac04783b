"""
Numeric embedding oracle: a high-precision complex root of the minimal polynomial.

The root is initialised either from a caller hint or from mpmath.polyroots, chosen
so that the field's conjugation matches complex conjugation where possible, then
polished with Newton iteration until |p(root)| falls below the residual tolerance.
"""

from typing import TYPE_CHECKING, List, Optional

import mpmath

from core_algebra.exact.polynomial import RationalPoly, poly_eval
from shared_utils.constants import ConjugationKind, LogScope
from shared_utils.error_handler import ConvergenceError
from shared_utils.logging_utils import ContextualLogger

if TYPE_CHECKING:
    from core_algebra.field.number_field import NumberField

logger = ContextualLogger(scope=LogScope.FIELD)

_REAL_ROOT_IMAG_CUTOFF = mpmath.mpf("1e-25")
_CONSISTENCY_CUTOFF = mpmath.mpf("1e-20")


def _newton(field: "NumberField", start) -> "mpmath.mpc":
    p = field.min_poly
    dp = p.derivative()
    p_abs = RationalPoly(abs(c) for c in p.coeffs)
    dps = field.working_dps
    tol = mpmath.mpf(field.root_residual_tolerance)
    with mpmath.workdps(dps):
        z = mpmath.mpc(start)
        for iteration in range(field.newton_max_iterations):
            fz = poly_eval(p, z, dps)
            # residual relative to the size of the terms being cancelled
            if abs(fz) < tol * max(1, abs(poly_eval(p_abs, abs(z), dps))):
                logger.debug("newton_converged", iterations=iteration, residual=mpmath.nstr(abs(fz), 5))
                return z
            dfz = poly_eval(dp, z, dps)
            if dfz == 0:
                break
            z = z - fz / dfz
        fz = poly_eval(p, z, dps)
        if abs(fz) < tol * max(1, abs(poly_eval(p_abs, abs(z), dps))):
            return z
    raise ConvergenceError(
        "Newton iteration did not converge to a root of the minimal polynomial",
        context={
            "min_poly": str(p),
            "start": mpmath.nstr(mpmath.mpc(start), 15),
            "max_iterations": field.newton_max_iterations,
        },
    )


def _initial_roots(field: "NumberField") -> List["mpmath.mpc"]:
    desc = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(field.min_poly.coeffs)]
    with mpmath.workdps(field.working_dps):
        try:
            roots = mpmath.polyroots(desc, maxsteps=field.newton_max_iterations, extraprec=field.working_dps)
        except mpmath.mp.NoConvergence as e:
            raise ConvergenceError(
                "root initialisation did not converge",
                context={"min_poly": str(field.min_poly)},
            ) from e
    return [mpmath.mpc(r) for r in roots]


def _conjugation_consistent(field: "NumberField", z) -> bool:
    star = poly_eval(field.alpha_star_poly, z, field.working_dps)
    return abs(star - mpmath.conj(z)) < _CONSISTENCY_CUTOFF * (1 + abs(z))


def _select_root(field: "NumberField", roots: List["mpmath.mpc"]):
    by_upper = sorted(roots, key=lambda r: (r.imag, r.real), reverse=True)
    kind = field.conjugation.kind
    if kind is ConjugationKind.REAL:
        real_roots = [r for r in roots if abs(r.imag) < _REAL_ROOT_IMAG_CUTOFF]
        if real_roots:
            return mpmath.mpc(max(r.real for r in real_roots))
        logger.warning("real_conjugation_without_real_root", min_poly=str(field.min_poly))
        return by_upper[0]
    consistent = [r for r in by_upper if _conjugation_consistent(field, r)]
    if consistent:
        return consistent[0]
    logger.warning("no_root_matches_conjugation", min_poly=str(field.min_poly))
    return by_upper[0]


def default_hint(field: "NumberField") -> Optional["mpmath.mpc"]:
    """Primitive-root estimate for cyclotomic fields, otherwise None."""
    if field.conjugation.kind is ConjugationKind.CYCLOTOMIC:
        with mpmath.workdps(field.working_dps):
            return mpmath.exp(2j * mpmath.pi / field.conjugation.p)
    return None


def find_numeric_root(field: "NumberField", hint=None) -> "mpmath.mpc":
    """Compute a high-precision root of the field's minimal polynomial.

    Args:
        field: The number field
        hint: Optional complex starting point for Newton iteration

    Returns:
        mpmath.mpc root with |p(root)| below the residual tolerance; also stored on the field

    Raises:
        ConvergenceError: On non-convergence after the iteration cap
    """
    start = hint if hint is not None else default_hint(field)
    if start is None:
        start = _select_root(field, _initial_roots(field))
    root = _newton(field, start)
    field.attach_numeric_root(root)
    logger.info("numeric_root_found", min_poly=str(field.min_poly), root=mpmath.nstr(root, 15))
    return root
