"""
Data models for the real vector arithmetic library.

Data flow:
  field spec file   → FieldSpecFile   → NumberField (validated)
  vector arguments  → RealVector      → quantize → FieldElement
  signal file       → SignalFile      → VectorSignal
  matrix file       → MatrixFile      → FieldMatrix
  golden demo       → DemoCase        → DemoReport
"""

from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core_algebra.exact.rational import format_rational, parse_rational
from shared_utils.constants import (
    CoefficientOrder, ConjugationKind, Defaults, Norm, OutputFormat, QuantizerKind
)


class ConjugationSpec(BaseModel):
    """How alpha* is obtained: identity, cyclotomic inverse, or an explicit polynomial in alpha."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ConjugationKind
    p: Optional[int] = None
    alpha_star: Optional[Tuple[Fraction, ...]] = None

    @field_validator("alpha_star", mode="before")
    @classmethod
    def parse_alpha_star(cls, v):
        if v is None:
            return None
        return tuple(parse_rational(c) for c in v)

    @model_validator(mode="after")
    def check_kind_fields(self) -> "ConjugationSpec":
        if self.kind is ConjugationKind.CYCLOTOMIC:
            if self.p is None or self.p < 3 or self.p % 2 == 0:
                raise ValueError(f"cyclotomic conjugation needs an odd prime p, got {self.p}")
        elif self.kind is ConjugationKind.EXPLICIT:
            if not self.alpha_star:
                raise ValueError("explicit conjugation needs alpha_star coefficients")
        return self

    @classmethod
    def real(cls) -> "ConjugationSpec":
        return cls(kind=ConjugationKind.REAL)

    @classmethod
    def cyclotomic(cls, p: int) -> "ConjugationSpec":
        return cls(kind=ConjugationKind.CYCLOTOMIC, p=p)

    @classmethod
    def explicit(cls, alpha_star) -> "ConjugationSpec":
        return cls(kind=ConjugationKind.EXPLICIT, alpha_star=alpha_star)

    def to_wire(self) -> dict:
        """JSON form used by field spec files."""
        if self.kind is ConjugationKind.CYCLOTOMIC:
            return {"kind": self.kind.value, "p": self.p}
        if self.kind is ConjugationKind.EXPLICIT:
            return {"kind": self.kind.value, "alpha_star": [format_rational(c) for c in self.alpha_star]}
        return {"kind": self.kind.value}


class FieldSpecFile(BaseModel):
    """Field specification file; coefficients are exact rational strings, ascending."""
    min_poly: List[str] = Field(min_length=3)
    conjugation: ConjugationSpec = Field(default_factory=ConjugationSpec.real)
    allow_unverified: bool = False
    root_hint: Optional[Tuple[str, str]] = None  # (real, imag) decimal strings


class EpsilonConfig(BaseModel):
    """Tolerance, norm and strategy for rational approximation of real vectors."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    epsilon: Fraction = Field(default_factory=lambda: parse_rational(Defaults.EPSILON))
    norm: Norm = Defaults.NORM
    strategy: QuantizerKind = Defaults.QUANTIZER

    @field_validator("epsilon", mode="before")
    @classmethod
    def parse_epsilon(cls, v):
        return parse_rational(v)

    @field_validator("epsilon")
    @classmethod
    def check_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError(f"epsilon must be > 0, got {format_rational(v)}")
        return v


class SignalFile(BaseModel):
    """Vector-valued signal file: support offset plus one coefficient list per sample."""
    start: int = 0
    elements: List[List[str]] = Field(min_length=1)


class MatrixFile(BaseModel):
    """Matrix file; each entry is a coefficient list."""
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    entries: List[List[List[str]]]

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixFile":
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self


class CliConfig(BaseModel):
    """Global CLI flags after parsing."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    field_spec_path: Optional[Path] = None
    epsilon: Fraction
    norm: Norm
    quantizer: QuantizerKind
    output_format: OutputFormat = OutputFormat.TABLE
    order: CoefficientOrder = CoefficientOrder.ASC

    @field_validator("epsilon", mode="before")
    @classmethod
    def parse_epsilon(cls, v):
        return parse_rational(v)

    @field_validator("epsilon")
    @classmethod
    def check_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("epsilon must be > 0")
        return v

    def epsilon_config(self) -> EpsilonConfig:
        return EpsilonConfig(epsilon=self.epsilon, norm=self.norm, strategy=self.quantizer)


class DemoCase(BaseModel):
    """One golden reproduction of a worked example."""
    name: str
    reference: str
    inputs: str
    expected: str
    actual: str
    passed: bool


class DemoReport(BaseModel):
    """Result of a golden demo run."""
    cases: List[DemoCase] = []
    all_passed: bool = True
