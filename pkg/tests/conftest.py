import random
from fractions import Fraction
from pathlib import Path

import pytest

from core_algebra.exact.polynomial import RationalPoly
from core_algebra.field.element import FieldElement
from core_algebra.field.number_field import cyclotomic_poly, validate_field
from core_algebra.schemas.models import ConjugationSpec

FIXTURES_DIR = Path(__file__).parent / "fixtures"
GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large randomized property suites")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def sqrt_field():
    """Q(sqrt(2) + sqrt(3)), p(x) = x^4 - 10x^2 + 1, real alpha."""
    return validate_field(RationalPoly([1, 0, -10, 0, 1]), ConjugationSpec.real())


@pytest.fixture(scope="session")
def cyc5_field():
    return validate_field(cyclotomic_poly(5), ConjugationSpec.cyclotomic(5))


@pytest.fixture(scope="session")
def cyc3_field():
    return validate_field(cyclotomic_poly(3), ConjugationSpec.cyclotomic(3))


@pytest.fixture(scope="session")
def gaussian_field():
    """Q(i), p(x) = x^2 + 1 with the explicit conjugation alpha* = -alpha."""
    return validate_field(RationalPoly([1, 0, 1]), ConjugationSpec.explicit(["0", "-1"]))


@pytest.fixture(scope="session")
def test_fields(gaussian_field, sqrt_field, cyc5_field):
    return [gaussian_field, sqrt_field, cyc5_field]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


@pytest.fixture
def random_rational(rng):
    def make(bound: int = 9, max_den: int = 7) -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
    return make


@pytest.fixture
def random_element(random_rational):
    def make(field, nonzero: bool = False) -> FieldElement:
        while True:
            e = FieldElement(field, [random_rational() for _ in range(field.degree)])
            if not (nonzero and e.is_zero()):
                return e
    return make
