"""
Golden reproduction of the worked examples.

Each case records its inputs, the expected value and what the library actually
computes; the report is deterministic (no timings) so it can be compared
byte-for-byte against a checked-in golden file.
"""

from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import mpmath

from core_algebra.engine.quantize import RealVector, eps_arith, quantize
from core_algebra.exact.polynomial import RationalPoly, poly_eval
from core_algebra.exact.rational import format_rational
from core_algebra.field.element import FieldElement, conjugate, embed_numeric, inner_product
from core_algebra.field.number_field import NumberField, cyclotomic_poly, validate_field
from core_algebra.parser.codec import VectorCodec
from core_algebra.schemas.models import ConjugationSpec, DemoCase, DemoReport, EpsilonConfig
from shared_utils.config_loader import Settings, get_settings
from shared_utils.constants import ArithOp, Defaults, LogScope, Norm, OutputFormat, QuantizerKind
from shared_utils.error_handler import AppException
from shared_utils.logging_utils import ContextualLogger

logger = ContextualLogger(scope=LogScope.DEMO)

SQRT2_PLUS_SQRT3 = "alpha = sqrt(2) + sqrt(3)"
FIFTH_ROOT_OF_UNITY = "alpha = exp(2*pi*i/5)"
THIRD_ROOT_OF_UNITY = "alpha = exp(2*pi*i/3)"

_RESIDUAL_BOUND = "1e-30"

ONES = [1, 1, 1, 1]
SIGNS = [1, 1, -1, -1]
R1 = [1, 2, 3, 4]
R2 = [5, 6, 7, 8]


def _fmt(coeffs: Sequence) -> str:
    return VectorCodec.format(coeffs)


def inner_closed_form_sqrt(r1: Sequence[Fraction], r2: Sequence[Fraction]) -> List[Fraction]:
    """Component formulas of <r1, r2> for p(x) = x^4 - 10x^2 + 1 and a real alpha."""
    a1, a2, a3, a4 = r1
    b1, b2, b3, b4 = r2
    return [
        a1 * b1 - a2 * b4 - a3 * b3 - a4 * (b2 + 10 * b4),
        a1 * b2 + a2 * b1 - a3 * b4 - a4 * b3,
        a1 * b3 + a2 * (b2 + 10 * b4) + a3 * (b1 + 10 * b3) + a4 * (10 * b2 + 99 * b4),
        a1 * b4 + a2 * b3 + a3 * (b2 + 10 * b4) + a4 * (b1 + 10 * b3),
    ]


def squared_norm_closed_form_sqrt(r: Sequence[Fraction]) -> List[Fraction]:
    """Component formulas of <r, r> for p(x) = x^4 - 10x^2 + 1 and a real alpha."""
    r1, r2, r3, r4 = r
    return [
        r1 ** 2 - r3 ** 2 - 10 * r4 ** 2 - 2 * r2 * r4,
        2 * r1 * r2 - 2 * r3 * r4,
        r2 ** 2 + 10 * r3 ** 2 + 99 * r4 ** 2 + 2 * r1 * r3 + 20 * r2 * r4,
        2 * r1 * r4 + 2 * r2 * r3 + 20 * r3 * r4,
    ]


def inner_closed_form_cyclotomic5(r1: Sequence[Fraction], r2: Sequence[Fraction]) -> List[Fraction]:
    """Component formulas of <r1, r2> for the fifth cyclotomic field."""
    a1, a2, a3, a4 = r1
    b1, b2, b3, b4 = r2
    return [
        a1 * (b1 - b2) + a2 * (b2 - b3) + a3 * (b3 - b4) + a4 * b4,
        -a1 * b2 + a2 * (b1 - b3) + a3 * (b2 - b4) + a4 * b3,
        a1 * (b4 - b2) - a2 * b3 + a3 * (b1 - b4) + a4 * b2,
        # the a3 term carries no b1
        a1 * (b3 - b2) + a2 * (b4 - b3) - a3 * b4 + a4 * b1,
    ]


class DemoRunner:
    """Runs the worked examples and collects a DemoReport.

    ``field_override`` replaces the sqrt(2) + sqrt(3) field in every case that
    uses it, which turns the run into a negative control.
    """

    def __init__(self, field_override: Optional[NumberField] = None, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.sqrt_field = field_override or validate_field(
            RationalPoly([1, 0, -10, 0, 1]), ConjugationSpec.real(), settings=self.settings
        )
        self.cyc5_field = validate_field(cyclotomic_poly(5), ConjugationSpec.cyclotomic(5), settings=self.settings)
        self.cyc3_field = validate_field(cyclotomic_poly(3), ConjugationSpec.cyclotomic(3), settings=self.settings)
        self.overridden = field_override is not None

    def _case(self, name: str, reference: str, inputs: str, expected: str, compute: Callable[[], str]) -> DemoCase:
        try:
            actual = compute()
        except AppException as e:
            actual = f"error: {e.message}"
        passed = actual == expected
        if not passed:
            logger.warning("demo_case_failed", case=name, expected=expected, actual=actual)
        return DemoCase(name=name, reference=reference, inputs=inputs, expected=expected, actual=actual, passed=passed)

    @staticmethod
    def _field_summary(field: NumberField) -> str:
        verdict = "irreducible" if field.verified else "unverified"
        return f"{field.min_poly}, degree {field.degree}, {verdict}"

    def _product(self, field: NumberField, a, b) -> str:
        return _fmt((field.element(a) * field.element(b)).coeffs)

    def _inner(self, field: NumberField, a, b) -> str:
        return _fmt(inner_product(field.element(a), field.element(b)).coeffs)

    def _residual(self, field: NumberField) -> str:
        with mpmath.workdps(field.working_dps):
            residual = abs(poly_eval(field.min_poly, field.numeric_root, field.working_dps))
            if residual < mpmath.mpf(_RESIDUAL_BOUND):
                return f"|p(root)| < {_RESIDUAL_BOUND}"
            return f"|p(root)| = {mpmath.nstr(residual, 5)}"

    def _embedding(self, element: FieldElement) -> str:
        z = embed_numeric(element)
        with mpmath.workdps(element.field.working_dps):
            if abs(z.imag) < mpmath.mpf(self.settings.embedding_tolerance):
                return mpmath.nstr(z.real, Defaults.DISPLAY_DIGITS)
            return mpmath.nstr(z, Defaults.DISPLAY_DIGITS)

    def run(self) -> DemoReport:
        """Run every case; failures are recorded, never raised."""
        f1, f2, f3 = self.sqrt_field, self.cyc5_field, self.cyc3_field
        r1 = [Fraction(c) for c in R1]
        r2 = [Fraction(c) for c in R2]
        third = EpsilonConfig(epsilon="1/100", norm=Norm.LINF, strategy=QuantizerKind.DYADIC)
        default_eps = EpsilonConfig()

        cases = [
            self._case(
                "field-alpha1", SQRT2_PLUS_SQRT3,
                f"min_poly {_fmt(f1.min_poly.coeffs)}, conjugation {f1.conjugation.kind.value}",
                "x^4 - 10*x^2 + 1, degree 4, irreducible",
                lambda: self._field_summary(f1),
            ),
            self._case(
                "field-alpha2", FIFTH_ROOT_OF_UNITY,
                f"min_poly {_fmt(f2.min_poly.coeffs)}, conjugation {f2.conjugation.kind.value}",
                "x^4 + x^3 + x^2 + x + 1, degree 4, irreducible",
                lambda: self._field_summary(f2),
            ),
            self._case(
                "product-alpha1", SQRT2_PLUS_SQRT3,
                f"{_fmt(ONES)} * {_fmt(SIGNS)}",
                "[12, 4, -108, -20]",
                lambda: self._product(f1, ONES, SIGNS),
            ),
            self._case(
                "product-alpha2", FIFTH_ROOT_OF_UNITY,
                f"{_fmt(ONES)} * {_fmt(SIGNS)}",
                "[0, 2, 2, 1]",
                lambda: self._product(f2, ONES, SIGNS),
            ),
            self._case(
                "conjugate-cyclotomic3", f"{THIRD_ROOT_OF_UNITY}, conj([r1, r2]) = [r1 - r2, -r2]",
                "conj([5, 2])",
                "[3, -2]",
                lambda: _fmt(conjugate(f3.element([5, 2])).coeffs),
            ),
            self._case(
                "inner-alpha-alpha", SQRT2_PLUS_SQRT3,
                "<[0, 1, 0, 0], [0, 1, 0, 0]>",
                "[0, 0, 1, 0]",
                lambda: self._inner(f1, [0, 1, 0, 0], [0, 1, 0, 0]),
            ),
            self._case(
                "inner-closed-form-alpha1", f"{SQRT2_PLUS_SQRT3}, component formulas of <r1, r2>",
                f"<{_fmt(R1)}, {_fmt(R2)}>",
                _fmt(inner_closed_form_sqrt(r1, r2)),
                lambda: self._inner(f1, R1, R2),
            ),
            self._case(
                "squared-norm-closed-form-alpha1", f"{SQRT2_PLUS_SQRT3}, component formulas of <r, r>",
                f"<{_fmt(R1)}, {_fmt(R1)}>",
                _fmt(squared_norm_closed_form_sqrt(r1)),
                lambda: self._inner(f1, R1, R1),
            ),
            self._case(
                "inner-closed-form-alpha2", f"{FIFTH_ROOT_OF_UNITY}, component formulas of <r1, r2>",
                f"<{_fmt(R1)}, {_fmt(R2)}>",
                _fmt(inner_closed_form_cyclotomic5(r1, r2)),
                lambda: self._inner(f2, R1, R2),
            ),
            self._case(
                "root-residual-alpha1", SQRT2_PLUS_SQRT3,
                f"p(root) for p = {f1.min_poly}",
                f"|p(root)| < {_RESIDUAL_BOUND}",
                lambda: self._residual(f1),
            ),
            self._case(
                "embedding-alpha1", SQRT2_PLUS_SQRT3,
                "embed([0, 1, 0, 0])",
                "3.1462643699",
                lambda: self._embedding(f1.alpha()),
            ),
            self._case(
                "quantize-dyadic", "epsilon range of a real vector",
                f"[0.3333333333], epsilon {format_rational(third.epsilon)}, "
                f"norm {third.norm.value}, quantizer {third.strategy.value}",
                "[43/128]",
                lambda: _fmt(quantize(RealVector.parse(["0.3333333333"]), third)),
            ),
            self._case(
                "epsilon-product-alpha1", f"{SQRT2_PLUS_SQRT3}, integer inputs pass through",
                f"{_fmt(ONES)} * {_fmt(SIGNS)}, epsilon {format_rational(default_eps.epsilon)}",
                "[12, 4, -108, -20]",
                lambda: _fmt(eps_arith(
                    ArithOp.MUL,
                    RealVector.parse([str(c) for c in ONES]),
                    RealVector.parse([str(c) for c in SIGNS]),
                    f1,
                    default_eps,
                ).coeffs),
            ),
        ]

        report = DemoReport(cases=cases, all_passed=all(c.passed for c in cases))
        logger.info(
            "demo_completed",
            cases=len(cases),
            failed=sum(1 for c in cases if not c.passed),
            field_override=self.overridden,
        )
        return report


def render_report(report: DemoReport, fmt: OutputFormat = OutputFormat.TABLE) -> str:
    """Serialize a report; the table form is what the golden file holds."""
    if OutputFormat(fmt) is OutputFormat.JSON:
        return report.model_dump_json(indent=2)
    lines = ["Worked-example reproduction", ""]
    for case in report.cases:
        lines += [
            f"[{'PASS' if case.passed else 'FAIL'}] {case.name}",
            f"  reference: {case.reference}",
            f"  inputs:    {case.inputs}",
            f"  expected:  {case.expected}",
            f"  actual:    {case.actual}",
            "",
        ]
    failed = sum(1 for c in report.cases if not c.passed)
    lines.append(f"{len(report.cases)} cases: {len(report.cases) - failed} passed, {failed} failed")
    return "\n".join(lines)
