import json
from fractions import Fraction

import pytest

from core_algebra.engine.linear import FieldMatrix
from core_algebra.engine.signal import VectorSignal, convolve
from core_algebra.parser.codec import (
    VectorCodec, field_from_dict, field_to_dict, load_field_spec, load_matrix, load_rhs, load_signal,
    matrix_from_dict, read_json_file, signal_to_dict,
)
from shared_utils.constants import CoefficientOrder, OutputFormat
from shared_utils.error_handler import ReduciblePolynomialError, ValidationError


class TestVectorCodec:
    @pytest.mark.parametrize("text,expected", [
        ("[1, 2, 3]", ["1", "2", "3"]),
        ("[1/2, -3, 0.25]", ["1/2", "-3", "0.25"]),
        ('["1/2", "3"]', ["1/2", "3"]),
        ("[0.5, 1e-9]", ["0.5", "1e-9"]),
        ("  [1 2  3] ", ["1", "2", "3"]),
    ])
    def test_parse_text(self, text, expected):
        assert VectorCodec.parse_text(text) == expected

    def test_parse_descending(self):
        assert VectorCodec.parse_text("[1, 2, 3]", CoefficientOrder.DESC) == ["3", "2", "1"]

    @pytest.mark.parametrize("text", ["1, 2", "[]", "[[1]]", "[true]", "{}"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValidationError):
            VectorCodec.parse_text(text)

    def test_format(self):
        coeffs = [Fraction(12), Fraction(4), Fraction(-108), Fraction(-20)]
        assert VectorCodec.format(coeffs) == "[12, 4, -108, -20]"
        assert VectorCodec.format(coeffs, OutputFormat.JSON) == '["12", "4", "-108", "-20"]'
        assert VectorCodec.format([Fraction(1, 2), 3], order=CoefficientOrder.DESC) == "[3, 1/2]"

    def test_element(self, sqrt_field):
        assert VectorCodec.element(sqrt_field, "[0, 1, 0, 0]") == sqrt_field.alpha()
        assert VectorCodec.element(sqrt_field, "[0, 0, 1, 0]", CoefficientOrder.DESC) == sqrt_field.alpha()


class TestFieldSpec:
    def test_load_sqrt_field(self, fixtures_dir, sqrt_field):
        assert load_field_spec(fixtures_dir / "sqrt23.json") == sqrt_field

    def test_load_gaussian_field(self, fixtures_dir, gaussian_field):
        field = load_field_spec(fixtures_dir / "gaussian.json")
        assert field == gaussian_field
        assert field_to_dict(field) == {
            "min_poly": ["1", "0", "1"],
            "conjugation": {"kind": "explicit", "alpha_star": ["0", "-1"]},
        }

    def test_cyclotomic_to_dict(self, fixtures_dir):
        data = json.loads((fixtures_dir / "cyc5.json").read_text())
        assert field_to_dict(field_from_dict(data)) == data

    def test_reducible_spec(self, fixtures_dir):
        with pytest.raises(ReduciblePolynomialError):
            load_field_spec(fixtures_dir / "reducible.json")

    @pytest.mark.parametrize("data", [
        {"min_poly": ["1", "1"]},
        {"min_poly": ["1", "0", "1"], "conjugation": {"kind": "cyclotomic"}},
        {"min_poly": ["1", "0", "1"], "conjugation": {"kind": "mirror"}},
        {"conjugation": {"kind": "real"}},
    ])
    def test_malformed_spec(self, data):
        with pytest.raises(ValidationError, match="invalid field spec"):
            field_from_dict(data)

    def test_root_hint(self):
        field = field_from_dict({"min_poly": ["-2", "0", "1"], "root_hint": ["-1.4", "0"]})
        assert field.numeric_root.real < 0


class TestFiles:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError, match="not found"):
            read_json_file(tmp_path / "absent.json")

    def test_wrong_extension(self, tmp_path):
        path = tmp_path / "field.yaml"
        path.write_text("{}")
        with pytest.raises(ValidationError, match="extension"):
            read_json_file(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError, match="invalid JSON"):
            read_json_file(path)


class TestSignalsAndMatrices:
    def test_signals_convolve(self, fixtures_dir, gaussian_field):
        s1 = load_signal(fixtures_dir / "signal_i_ones.json", gaussian_field)
        s2 = load_signal(fixtures_dir / "signal_ones.json", gaussian_field)
        assert signal_to_dict(convolve(s1, s2)) == {
            "start": 0,
            "elements": [["1", "0"], ["1", "1"], ["0", "1"]],
        }

    def test_signal_descending_order(self, fixtures_dir, gaussian_field):
        s = load_signal(fixtures_dir / "signal_i_ones.json", gaussian_field, CoefficientOrder.DESC)
        assert s.elements[0] == gaussian_field.alpha()
        assert signal_to_dict(s, CoefficientOrder.DESC)["elements"] == [["1", "0"], ["0", "1"]]

    def test_signal_wrong_degree(self, fixtures_dir, sqrt_field):
        with pytest.raises(ValidationError):
            load_signal(fixtures_dir / "signal_ones.json", sqrt_field)

    def test_load_matrix(self, fixtures_dir, sqrt_field):
        assert load_matrix(fixtures_dir / "identity2.json", sqrt_field) == FieldMatrix.identity(sqrt_field, 2)

    def test_matrix_shape_mismatch(self, sqrt_field):
        data = {"rows": 2, "cols": 1, "entries": [[["1", "0", "0", "0"]]]}
        with pytest.raises(ValidationError, match="invalid matrix"):
            matrix_from_dict(data, sqrt_field)

    def test_rhs_from_matrix_file(self, fixtures_dir, sqrt_field):
        rhs = load_rhs(fixtures_dir / "rhs2.json", sqrt_field)
        assert rhs.shape == (2, 1)
        assert rhs[0, 0] == sqrt_field.element(["1/2", 0, 3, 0])

    def test_rhs_from_signal_file(self, fixtures_dir, gaussian_field):
        rhs = load_rhs(fixtures_dir / "signal_i_ones.json", gaussian_field)
        assert rhs == FieldMatrix.column(VectorSignal.from_coeffs(gaussian_field, [[1, 0], [0, 1]]).elements)
