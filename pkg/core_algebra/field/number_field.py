"""
The number field Q(alpha) = Q[x]/(p(x)).

A NumberField is built only through ``validate_field``, which checks that the
minimal polynomial is monic of degree >= 2, verifies irreducibility (or records
an explicit waiver) and validates the conjugation spec. The numeric root used by
the embedding oracle is computed once, on first use, behind a lock.
"""

import threading
from typing import Iterable, Optional

import sympy

from core_algebra.exact.polynomial import RationalPoly, poly_div_rem
from core_algebra.exact.rational import RationalLike, parse_rational
from core_algebra.field.element import FieldElement
from core_algebra.field.embedding import find_numeric_root
from core_algebra.field.irreducibility import IrreducibilityVerdict, check_irreducible
from core_algebra.schemas.models import ConjugationSpec
from shared_utils.config_loader import Settings, get_settings
from shared_utils.constants import ConjugationKind, LogScope
from shared_utils.error_handler import FieldValidationError, IrreducibilityUnverifiedError
from shared_utils.logging_utils import ContextualLogger

logger = ContextualLogger(scope=LogScope.FIELD)


class NumberField:
    """Algebraic number field of degree m with a conjugation map."""

    def __init__(
        self,
        min_poly: RationalPoly,
        conjugation: ConjugationSpec,
        alpha_star_poly: RationalPoly,
        verified: bool,
        settings: Settings,
        root_hint=None,
    ):
        self._min_poly = min_poly
        self._conjugation = conjugation
        self._alpha_star_poly = alpha_star_poly
        self._verified = verified
        self._working_dps = settings.working_dps
        self._root_residual_tolerance = settings.root_residual_tolerance
        self._newton_max_iterations = settings.newton_max_iterations
        self._root_hint = root_hint
        self._numeric_root = None
        self._root_lock = threading.Lock()
        self._alpha_star_element: Optional[FieldElement] = None

    # -- identity -------------------------------------------------------------
    @property
    def min_poly(self) -> RationalPoly:
        return self._min_poly

    @property
    def degree(self) -> int:
        return self._min_poly.degree

    @property
    def conjugation(self) -> ConjugationSpec:
        return self._conjugation

    @property
    def verified(self) -> bool:
        """False when irreducibility was waived with allow_unverified."""
        return self._verified

    @property
    def conjugation_is_identity(self) -> bool:
        return self._conjugation.kind is ConjugationKind.REAL

    @property
    def alpha_star_poly(self) -> RationalPoly:
        return self._alpha_star_poly

    @property
    def alpha_star_element(self) -> FieldElement:
        if self._alpha_star_element is None:
            self._alpha_star_element = FieldElement.from_poly(self, self._alpha_star_poly)
        return self._alpha_star_element

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumberField):
            return NotImplemented
        return self is other or (
            self._min_poly == other._min_poly and self._conjugation == other._conjugation
        )

    def __hash__(self) -> int:
        return hash((self._min_poly, self._conjugation))

    def __repr__(self) -> str:
        return f"NumberField(p={self._min_poly}, conjugation={self._conjugation.kind.value})"

    # -- numeric settings -----------------------------------------------------
    @property
    def working_dps(self) -> int:
        return self._working_dps

    @property
    def root_residual_tolerance(self) -> float:
        return self._root_residual_tolerance

    @property
    def newton_max_iterations(self) -> int:
        return self._newton_max_iterations

    @property
    def has_numeric_root(self) -> bool:
        return self._numeric_root is not None

    @property
    def numeric_root(self):
        """High-precision root used by the embedding; computed on first access."""
        if self._numeric_root is None:
            with self._root_lock:
                if self._numeric_root is None:
                    find_numeric_root(self, self._root_hint)
        return self._numeric_root

    def attach_numeric_root(self, root) -> None:
        """Record the root used by the embedding."""
        self._numeric_root = root

    # -- element constructors -------------------------------------------------
    def element(self, coeffs: Iterable[RationalLike]) -> FieldElement:
        return FieldElement(self, coeffs)

    def from_poly(self, poly: RationalPoly) -> FieldElement:
        return FieldElement.from_poly(self, poly)

    def constant(self, c: RationalLike) -> FieldElement:
        return FieldElement(self, [parse_rational(c)] + [0] * (self.degree - 1))

    def zero(self) -> FieldElement:
        return self.constant(0)

    def one(self) -> FieldElement:
        return self.constant(1)

    def alpha(self) -> FieldElement:
        return FieldElement(self, [0, 1] + [0] * (self.degree - 2))


def cyclotomic_poly(p: int) -> RationalPoly:
    """1 + x + ... + x^(p-1), the minimal polynomial of exp(2*pi*i/p) for prime p."""
    return RationalPoly([1] * p)


def _compose_mod(outer: RationalPoly, inner: RationalPoly, modulus: RationalPoly) -> RationalPoly:
    """outer(inner(x)) mod modulus, by Horner with reduction at every step."""
    acc = RationalPoly.zero()
    for c in reversed(outer.coeffs):
        acc = poly_div_rem(acc * inner + RationalPoly([c]), modulus)[1]
    return acc


def _alpha_star_for(min_poly: RationalPoly, conjugation: ConjugationSpec) -> RationalPoly:
    m = min_poly.degree
    if conjugation.kind is ConjugationKind.REAL:
        return RationalPoly.x()

    if conjugation.kind is ConjugationKind.CYCLOTOMIC:
        p = conjugation.p
        if not sympy.isprime(p):
            raise FieldValidationError(f"cyclotomic conjugation needs a prime, got {p}", context={"p": p})
        if min_poly != cyclotomic_poly(p):
            raise FieldValidationError(
                f"cyclotomic conjugation with p={p} needs minimal polynomial {cyclotomic_poly(p)}",
                context={"p": p, "min_poly": str(min_poly)},
            )
        # alpha* = alpha^(p-1) = -(1 + alpha + ... + alpha^(p-2))
        return RationalPoly([-1] * (p - 1))

    star = RationalPoly(conjugation.alpha_star)
    if len(conjugation.alpha_star) != m:
        raise FieldValidationError(
            f"alpha_star must have {m} coefficients, got {len(conjugation.alpha_star)}",
            context={"expected": m},
        )
    if not _compose_mod(min_poly, star, min_poly).is_zero():
        raise FieldValidationError(
            "alpha_star is not a root of the minimal polynomial",
            context={"alpha_star": str(star), "min_poly": str(min_poly)},
        )
    if _compose_mod(star, star, min_poly) != RationalPoly.x():
        raise FieldValidationError(
            "explicit conjugation is not an involution: conj(conj(alpha)) != alpha",
            context={"alpha_star": str(star)},
        )
    return star


def validate_field(
    min_poly: RationalPoly,
    conjugation: Optional[ConjugationSpec] = None,
    allow_unverified: bool = False,
    root_hint=None,
    settings: Optional[Settings] = None,
) -> NumberField:
    """Validate a minimal polynomial and conjugation spec and build the field.

    Args:
        min_poly: Candidate minimal polynomial (monic, degree >= 2)
        conjugation: Conjugation spec; defaults to a real alpha
        allow_unverified: Accept an inconclusive irreducibility check (flag recorded)
        root_hint: Optional complex start for the numeric root
        settings: Override of the cached settings

    Returns:
        Validated NumberField

    Raises:
        FieldValidationError: Non-monic or low-degree input, bad conjugation spec
        ReduciblePolynomialError: A factor was found
        IrreducibilityUnverifiedError: Checks inconclusive without the waiver
    """
    settings = settings or get_settings()
    conjugation = conjugation or ConjugationSpec.real()

    if min_poly.degree < 2:
        raise FieldValidationError(
            f"minimal polynomial must have degree >= 2, got {min_poly.degree}",
            context={"min_poly": str(min_poly)},
        )
    if not min_poly.is_monic():
        raise FieldValidationError(
            "minimal polynomial must be monic",
            context={"min_poly": str(min_poly), "leading": str(min_poly.leading)},
        )

    verdict = check_irreducible(min_poly, settings.irreducibility_prime_bound)
    verified = verdict is IrreducibilityVerdict.IRREDUCIBLE
    if not verified and not allow_unverified:
        raise IrreducibilityUnverifiedError(
            f"could not verify that {min_poly} is irreducible; pass allow_unverified to accept it",
            context={"min_poly": str(min_poly), "prime_bound": settings.irreducibility_prime_bound},
        )

    alpha_star = _alpha_star_for(min_poly, conjugation)
    field = NumberField(min_poly, conjugation, alpha_star, verified, settings, root_hint)

    logger.info(
        "field_validated",
        min_poly=str(min_poly),
        degree=field.degree,
        conjugation=conjugation.kind.value,
        verified=verified,
    )
    return field


def field_from_coeffs(
    coeffs: Iterable[RationalLike],
    conjugation: Optional[ConjugationSpec] = None,
    **kwargs,
) -> NumberField:
    """Convenience wrapper: ascending rational coefficients -> validated field."""
    return validate_field(RationalPoly(coeffs), conjugation, **kwargs)
