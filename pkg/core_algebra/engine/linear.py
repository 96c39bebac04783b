"""
Exact linear algebra over a number field.

Gaussian elimination picks the first nonzero entry of a column as pivot; exact
arithmetic needs no magnitude-based pivoting. Least squares is the normal-equation
system A^H A x = A^H b, where A^H is the entrywise conjugate of the transpose.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from core_algebra.exact.rational import RationalLike
from core_algebra.field.element import FieldElement, conjugate
from core_algebra.field.number_field import NumberField
from shared_utils.constants import LogScope
from shared_utils.error_handler import FieldMismatchError, SingularMatrixError, ValidationError
from shared_utils.logging_utils import ContextualLogger, log_execution
from shared_utils.validation import InputValidator

logger = ContextualLogger(scope=LogScope.LINEAR)

Rows = List[List[FieldElement]]


class FieldMatrix:
    """Immutable L x J matrix of elements of one number field."""

    __slots__ = ("_rows", "_field")

    def __init__(self, rows: Iterable[Iterable[FieldElement]]):
        values = tuple(tuple(row) for row in rows)
        if not values or not values[0]:
            raise ValidationError("a matrix needs at least one row and one column")
        cols = len(values[0])
        if any(len(row) != cols for row in values):
            raise ValidationError("matrix rows have different lengths", context={"cols": cols})
        field = values[0][0].field
        for row in values:
            for e in row:
                if e.field != field:
                    raise FieldMismatchError("matrix entries belong to different fields")
        object.__setattr__(self, "_rows", values)
        object.__setattr__(self, "_field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_rows(cls, field: NumberField, rows: Iterable[Iterable[Iterable[RationalLike]]]) -> "FieldMatrix":
        """Build from nested coefficient lists: rows -> entries -> coefficients."""
        return cls([[FieldElement(field, coeffs) for coeffs in row] for row in rows])

    @classmethod
    def identity(cls, field: NumberField, n: int) -> "FieldMatrix":
        InputValidator.validate_positive_int(n, "matrix size")
        one, zero = field.one(), field.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: NumberField, rows: int, cols: int) -> "FieldMatrix":
        InputValidator.validate_positive_int(rows, "rows")
        InputValidator.validate_positive_int(cols, "cols")
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def column(cls, elements: Iterable[FieldElement]) -> "FieldMatrix":
        """An L x 1 matrix, the form vectors take in a linear system."""
        return cls([[e] for e in elements])

    @classmethod
    def diagonal(cls, elements: Sequence[FieldElement]) -> "FieldMatrix":
        zero = elements[0].field.zero()
        n = len(elements)
        return cls([[elements[i] if i == j else zero for j in range(n)] for i in range(n)])

    # -- accessors ------------------------------------------------------------
    @property
    def field(self) -> NumberField:
        return self._field

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> FieldElement:
        i, j = index
        return self._rows[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._rows for e in row)

    # -- algebra --------------------------------------------------------------
    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(zip(*self._rows))

    def conjugate_transpose(self) -> "FieldMatrix":
        """A^H: transpose with every entry conjugated."""
        return FieldMatrix([[conjugate(e) for e in col] for col in zip(*self._rows)])

    def _check_compatible(self, other: "FieldMatrix") -> None:
        if self._field != other._field:
            raise FieldMismatchError(
                context={"left": str(self._field.min_poly), "right": str(other._field.min_poly)}
            )

    def _elementwise(self, other: "FieldMatrix", subtract: bool) -> "FieldMatrix":
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ValidationError(
                "matrix shapes differ",
                context={"left": list(self.shape), "right": list(other.shape)},
            )
        if subtract:
            return FieldMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])
        return FieldMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self._elementwise(other, subtract=False)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self._elementwise(other, subtract=True)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValidationError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}",
                context={"left": list(self.shape), "right": list(other.shape)},
            )
        out = []
        for row in self._rows:
            out_row = []
            for j in range(other.cols):
                acc = self._field.zero()
                for k, a in enumerate(row):
                    acc = acc + a * other._rows[k][j]
                out_row.append(acc)
            out.append(out_row)
        return FieldMatrix(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols}, degree={self._field.degree})"


def _eliminate_column(work: Rows, col: int, row: int, width: int) -> Optional[int]:
    """Move the first nonzero entry of ``col`` at or below ``row`` into ``row``
    and clear the entries below it.

    Returns the row the pivot came from, or None when the column has no pivot.
    """
    pivot_row = next((r for r in range(row, len(work)) if not work[r][col].is_zero()), None)
    if pivot_row is None:
        return None
    if pivot_row != row:
        work[row], work[pivot_row] = work[pivot_row], work[row]
    pivot = work[row][col]
    for r in range(row + 1, len(work)):
        if work[r][col].is_zero():
            continue
        factor = work[r][col] / pivot
        for c in range(col, width):
            work[r][c] = work[r][c] - factor * work[row][c]
    return pivot_row


@log_execution(scope=LogScope.LINEAR, level="debug")
def solve(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Solve A x = b exactly by Gaussian elimination.

    Args:
        a: Square n x n coefficient matrix
        b: n x k right-hand side (k >= 1 columns solved together)

    Returns:
        n x k solution matrix

    Raises:
        ValidationError: A not square, or b with the wrong number of rows
        SingularMatrixError: Some column has no nonzero pivot
    """
    if not a.is_square():
        raise ValidationError("solve needs a square matrix", context={"shape": list(a.shape)})
    if b.rows != a.rows:
        raise ValidationError(
            "right-hand side must have as many rows as the matrix",
            context={"matrix_rows": a.rows, "rhs_rows": b.rows},
        )
    a._check_compatible(b)

    n, k = a.rows, b.cols
    work: Rows = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    for col in range(n):
        if _eliminate_column(work, col, col, n + k) is None:
            raise SingularMatrixError(
                "matrix is singular: no nonzero pivot in column",
                context={"column": col, "size": n},
            )

    # back substitution on the upper-triangular system
    x: Rows = [[a.field.zero()] * k for _ in range(n)]
    for i in reversed(range(n)):
        pivot = work[i][i]
        for j in range(k):
            acc = work[i][n + j]
            for c in range(i + 1, n):
                acc = acc - work[i][c] * x[c][j]
            x[i][j] = acc / pivot

    logger.debug("system_solved", size=n, rhs_columns=k)
    return FieldMatrix(x)


def determinant(a: FieldMatrix) -> FieldElement:
    """Exact determinant by elimination; the zero element when no pivot exists.

    Raises:
        ValidationError: If A is not square
    """
    if not a.is_square():
        raise ValidationError("determinant needs a square matrix", context={"shape": list(a.shape)})
    n = a.rows
    work: Rows = [list(row) for row in a.entries]
    det = a.field.one()
    for col in range(n):
        pivot_row = _eliminate_column(work, col, col, n)
        if pivot_row is None:
            return a.field.zero()
        if pivot_row != col:
            det = -det
        det = det * work[col][col]
    return det


@log_execution(scope=LogScope.LINEAR, level="debug")
def least_squares(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Solve the normal equations (A^H A) x = A^H b.

    This is a formal construction over the field; no real-valued minimality is
    claimed for the result.

    Raises:
        ValidationError: Fewer rows than columns, or b with the wrong number of rows
        SingularMatrixError: A^H A is singular
    """
    if a.rows < a.cols:
        raise ValidationError(
            "least squares needs at least as many rows as columns",
            context={"shape": list(a.shape)},
        )
    if b.rows != a.rows:
        raise ValidationError(
            "right-hand side must have as many rows as the matrix",
            context={"matrix_rows": a.rows, "rhs_rows": b.rows},
        )
    a_h = a.conjugate_transpose()
    try:
        return solve(a_h @ a, a_h @ b)
    except SingularMatrixError as e:
        raise SingularMatrixError(
            "normal matrix A^H A is singular",
            context={"shape": list(a.shape), **e.context},
        ) from e
