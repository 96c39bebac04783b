"""
Codecs between wire formats and library objects.

Field spec, signal and matrix files are JSON validated through the pydantic
models in ``core_algebra.schemas.models``. Rationals always travel as strings
(``"num/den"`` or ``"num"``), never as floats. Vectors may be given in
descending order with ``CoefficientOrder.DESC``; field spec files are always
ascending.
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import mpmath
import pydantic

from core_algebra.engine.linear import FieldMatrix
from core_algebra.engine.signal import VectorSignal
from core_algebra.exact.polynomial import RationalPoly
from core_algebra.exact.rational import format_rational, parse_rational
from core_algebra.field.element import FieldElement
from core_algebra.field.number_field import NumberField, validate_field
from core_algebra.schemas.models import FieldSpecFile, MatrixFile, SignalFile
from shared_utils.config_loader import Settings
from shared_utils.constants import CoefficientOrder, LogScope, OutputFormat
from shared_utils.error_handler import ValidationError
from shared_utils.logging_utils import ContextualLogger
from shared_utils.validation import InputValidator

logger = ContextualLogger(scope=LogScope.CODEC)

_SEPARATORS = re.compile(r"[,\s]+")


def _oriented(values: Sequence, order: CoefficientOrder) -> list:
    values = list(values)
    if CoefficientOrder(order) is CoefficientOrder.DESC:
        values.reverse()
    return values


def _model_error(exc: pydantic.ValidationError, what: str) -> ValidationError:
    first = exc.errors()[0] if exc.errors() else {}
    return ValidationError(
        f"invalid {what}: {first.get('msg', str(exc))}",
        context={"location": [str(p) for p in first.get("loc", ())]},
    )


class VectorCodec:
    """Parse and print coefficient vectors."""

    @staticmethod
    def parse_text(text: str, order: CoefficientOrder = CoefficientOrder.ASC) -> List[str]:
        """Split a vector argument into component literals.

        Accepts a JSON array (numbers or strings) or a bracketed list such as
        ``[1/2, -3, 0.25]``. Components are kept as text so that exact and
        decimal inputs can be told apart downstream.

        Raises:
            ValidationError: On an empty or malformed vector
        """
        stripped = text.strip()
        try:
            data = json.loads(stripped, parse_float=str, parse_int=str)
        except json.JSONDecodeError:
            if not (stripped.startswith("[") and stripped.endswith("]")):
                raise ValidationError(f"vector must be a bracketed list: {text!r}", context={"value": text})
            data = [tok for tok in _SEPARATORS.split(stripped[1:-1]) if tok]
        if not isinstance(data, list) or not data:
            raise ValidationError(f"vector must be a non-empty list: {text!r}", context={"value": text})
        if any(not isinstance(c, str) for c in data):
            raise ValidationError("vector components must be numbers or strings", context={"value": text})
        return _oriented(data, order)

    @staticmethod
    def format(
        coeffs: Sequence,
        fmt: OutputFormat = OutputFormat.TABLE,
        order: CoefficientOrder = CoefficientOrder.ASC,
    ) -> str:
        """``[12, 4, -108, -20]`` for tables, ``["12", "4", "-108", "-20"]`` for JSON."""
        items = [format_rational(parse_rational(c)) for c in _oriented(coeffs, order)]
        if OutputFormat(fmt) is OutputFormat.JSON:
            return json.dumps(items)
        return "[" + ", ".join(items) + "]"

    @staticmethod
    def element(
        field: NumberField, text: str, order: CoefficientOrder = CoefficientOrder.ASC
    ) -> FieldElement:
        """Exact field element from a vector argument."""
        return FieldElement(field, VectorCodec.parse_text(text, order))


def read_json_file(path: Union[str, Path]) -> Any:
    """Load a JSON input file.

    Raises:
        ValidationError: Missing file, wrong extension or invalid JSON
    """
    p = InputValidator.validate_file_path(str(path), allowed_extensions=("json",))
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValidationError(
            f"invalid JSON in {p.name}: {e.msg}",
            context={"path": str(p), "line": e.lineno},
        ) from e


def field_from_dict(data: Dict[str, Any], settings: Optional[Settings] = None) -> NumberField:
    """Validate a field spec mapping and build the field.

    Raises:
        ValidationError: Malformed spec
        FieldValidationError: The polynomial or conjugation does not define a field
    """
    try:
        spec = FieldSpecFile.model_validate(data)
    except pydantic.ValidationError as e:
        raise _model_error(e, "field spec") from e
    hint = None
    if spec.root_hint is not None:
        hint = mpmath.mpc(mpmath.mpf(spec.root_hint[0]), mpmath.mpf(spec.root_hint[1]))
    return validate_field(
        RationalPoly(spec.min_poly),
        spec.conjugation,
        allow_unverified=spec.allow_unverified,
        root_hint=hint,
        settings=settings,
    )


def field_to_dict(field: NumberField) -> Dict[str, Any]:
    return {
        "min_poly": [format_rational(c) for c in field.min_poly.coeffs],
        "conjugation": field.conjugation.to_wire(),
    }


def load_field_spec(path: Union[str, Path], settings: Optional[Settings] = None) -> NumberField:
    """Read and validate a field specification file."""
    field = field_from_dict(read_json_file(path), settings)
    logger.debug("field_spec_loaded", path=str(path), degree=field.degree)
    return field


def signal_from_dict(
    data: Dict[str, Any], field: NumberField, order: CoefficientOrder = CoefficientOrder.ASC
) -> VectorSignal:
    try:
        spec = SignalFile.model_validate(data)
    except pydantic.ValidationError as e:
        raise _model_error(e, "signal") from e
    return VectorSignal.from_coeffs(field, (_oriented(row, order) for row in spec.elements), spec.start)


def signal_to_dict(signal: VectorSignal, order: CoefficientOrder = CoefficientOrder.ASC) -> Dict[str, Any]:
    return {
        "start": signal.start,
        "elements": [[format_rational(c) for c in _oriented(e.coeffs, order)] for e in signal.elements],
    }


def load_signal(
    path: Union[str, Path], field: NumberField, order: CoefficientOrder = CoefficientOrder.ASC
) -> VectorSignal:
    signal = signal_from_dict(read_json_file(path), field, order)
    logger.debug("signal_loaded", path=str(path), length=len(signal), start=signal.start)
    return signal


def matrix_from_dict(
    data: Dict[str, Any], field: NumberField, order: CoefficientOrder = CoefficientOrder.ASC
) -> FieldMatrix:
    try:
        spec = MatrixFile.model_validate(data)
    except pydantic.ValidationError as e:
        raise _model_error(e, "matrix") from e
    return FieldMatrix.from_rows(
        field, ([_oriented(entry, order) for entry in row] for row in spec.entries)
    )


def matrix_to_dict(matrix: FieldMatrix, order: CoefficientOrder = CoefficientOrder.ASC) -> Dict[str, Any]:
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [
            [[format_rational(c) for c in _oriented(e.coeffs, order)] for e in row]
            for row in matrix.entries
        ],
    }


def load_matrix(
    path: Union[str, Path], field: NumberField, order: CoefficientOrder = CoefficientOrder.ASC
) -> FieldMatrix:
    matrix = matrix_from_dict(read_json_file(path), field, order)
    logger.debug("matrix_loaded", path=str(path), rows=matrix.rows, cols=matrix.cols)
    return matrix


def load_rhs(
    path: Union[str, Path], field: NumberField, order: CoefficientOrder = CoefficientOrder.ASC
) -> FieldMatrix:
    """Right-hand side file: a matrix file, or a signal file read as a column."""
    data = read_json_file(path)
    if isinstance(data, dict) and "elements" in data:
        return FieldMatrix.column(signal_from_dict(data, field, order).elements)
    return matrix_from_dict(data, field, order)
