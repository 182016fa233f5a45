"""
Tests for reading and writing fan and polynomial documents.

To run: pytest tests/test_documents.py -v
"""

import json
from fractions import Fraction

import pytest

from fanalyze.documents import (
    FanDocument,
    fan_to_document,
    load_fan_document,
    parse_coefficient,
    parse_fan,
    parse_poly,
    poly_from_dict,
    poly_to_dict,
    write_fan,
)
from fanalyze.errors import InvalidFan, ParseError
from fanalyze.geometry.cone import cone_from_rays
from fanalyze.services.charts import LaurentPoly
from tests import corpus

TETRA_DOC = {"rank": 3, "rays": [list(r) for r in corpus.TETRA_RAYS], "max_cones": corpus.TETRA_CONES}


class TestParseFan:
    def test_tetra_fan(self, write_json):
        fan = parse_fan(write_json("tetra.json", TETRA_DOC))
        assert fan.rank == 3
        assert len(fan.ray_generators) == 4
        assert len(fan.max_cones) == 4

    def test_zero_ray(self, write_json):
        path = write_json("zero.json", {"rank": 2, "rays": [[0, 0]], "max_cones": [[0]]})
        with pytest.raises(ParseError, match="ray 0 is the zero vector"):
            parse_fan(path)

    def test_overlapping_cones(self, write_json):
        doc = {"rank": 2, "rays": [[1, 0], [0, 1], [1, 1], [1, -1]], "max_cones": [[0, 1], [2, 3]]}
        with pytest.raises(InvalidFan):
            parse_fan(write_json("overlap.json", doc))

    def test_missing_field(self, write_json):
        with pytest.raises(ParseError, match="missing field 'max_cones'"):
            parse_fan(write_json("partial.json", {"rank": 2, "rays": []}))

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{rank: 2")
        with pytest.raises(ParseError, match="invalid JSON at line 1"):
            parse_fan(str(path))

    def test_missing_file(self, tmp_path):
        path = str(tmp_path / "absent.json")
        with pytest.raises(ParseError, match="cannot read file") as exc:
            parse_fan(path)
        assert exc.value.path == path
        assert exc.value.exit_code == 2

    def test_duplicate_ray(self, write_json):
        doc = {"rank": 2, "rays": [[1, 0], [1, 0]], "max_cones": [[0]]}
        with pytest.raises(ParseError, match="duplicates an earlier ray"):
            parse_fan(write_json("dup.json", doc))

    def test_duplicate_cone(self, write_json):
        doc = {"rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1], [1, 0]]}
        with pytest.raises(ParseError, match="duplicates an earlier cone"):
            parse_fan(write_json("dup.json", doc))

    def test_missing_ray_index(self, write_json):
        doc = {"rank": 2, "rays": [[1, 0]], "max_cones": [[0, 3]]}
        with pytest.raises(ParseError, match="missing ray 3"):
            parse_fan(write_json("idx.json", doc))

    @pytest.mark.parametrize(
        "doc,message",
        [
            ([], "JSON object"),
            ({"rank": 0, "rays": [], "max_cones": []}, "positive integer"),
            ({"rank": True, "rays": [], "max_cones": []}, "positive integer"),
            ({"rank": 2, "rays": [[1, 0, 0]], "max_cones": []}, "expected 2"),
            ({"rank": 2, "rays": [[1, "a"]], "max_cones": []}, "list of integers"),
            ({"rank": 2, "rays": [[1, 0]], "max_cones": [[0, 0]]}, "repeats a ray index"),
        ],
    )
    def test_malformed(self, doc, message):
        with pytest.raises(ParseError, match=message):
            FanDocument.from_dict(doc)

    def test_empty_cone_is_zero_cone(self, write_json):
        fan = parse_fan(write_json("torus.json", {"rank": 2, "rays": [], "max_cones": [[]]}))
        assert fan.max_cones[0].is_zero


class TestWriteFan:
    def test_round_trip(self, tmp_path, tetra_fan, a1_fan):
        for fan in (tetra_fan, a1_fan, corpus.torus_fan(3)):
            path = str(tmp_path / "out.json")
            write_fan(fan, path)
            assert parse_fan(path) == fan

    @pytest.mark.parametrize("fan", corpus.regression_fans())
    def test_round_trip_over_corpus(self, tmp_path, fan):
        path = str(tmp_path / "fan.json")
        write_fan(fan, path)
        assert parse_fan(path) == fan
        assert fan_to_document(parse_fan(path)).to_dict() == fan_to_document(fan).to_dict()

    def test_written_shape(self, tmp_path, orthant_fan):
        path = tmp_path / "orthant.json"
        write_fan(orthant_fan, str(path))
        data = json.loads(path.read_text())
        assert data == {"rank": 2, "rays": [[0, 1], [1, 0]], "max_cones": [[0, 1]]}
        assert path.read_text().endswith("\n")

    def test_document_from_fan(self, a1_fan):
        doc = fan_to_document(a1_fan)
        assert doc.to_fan() == a1_fan


class TestDocumentCones:
    def test_cone_by_index(self, write_json):
        doc = load_fan_document(write_json("tetra.json", TETRA_DOC))
        assert doc.cone(0) == cone_from_rays(3, [(1, 1, 1), (1, -1, -1)])
        assert len(doc.cones()) == 4

    def test_index_out_of_range(self, write_json):
        doc = load_fan_document(write_json("tetra.json", TETRA_DOC))
        with pytest.raises(ParseError, match="out of range"):
            doc.cone(4)


class TestPolynomials:
    def test_fraction_coefficients(self, write_json):
        doc = {
            "terms": [
                {"exponent": [1, -1], "coefficient": "1/2"},
                {"exponent": [0, 0], "coefficient": -3},
            ]
        }
        f = parse_poly(write_json("f.json", doc))
        assert f.rank == 2
        assert f.terms == {(0, 0): Fraction(-3), (1, -1): Fraction(1, 2)}

    def test_repeated_exponents_are_summed(self):
        doc = {"terms": [{"exponent": [1], "coefficient": 1}, {"exponent": [1], "coefficient": -1}]}
        assert poly_from_dict(doc).is_zero

    def test_zero_polynomial_needs_rank(self):
        with pytest.raises(ParseError, match="explicit 'rank'"):
            poly_from_dict({"terms": []})
        assert poly_from_dict({"rank": 3, "terms": []}) == LaurentPoly(3)

    def test_exponent_length(self):
        doc = {"rank": 2, "terms": [{"exponent": [1], "coefficient": 1}]}
        with pytest.raises(ParseError, match="expected 2"):
            poly_from_dict(doc)

    @pytest.mark.parametrize("value", ["1/0", "one", 1.5, None])
    def test_bad_coefficients(self, value):
        with pytest.raises(ParseError):
            parse_coefficient(value)

    def test_coefficient_forms(self):
        assert parse_coefficient(4) == 4
        assert parse_coefficient("-2/6") == Fraction(-1, 3)
        assert parse_coefficient(" 5 ") == 5

    def test_to_dict(self):
        f = LaurentPoly(2, {(1, 0): Fraction(2, 3)})
        assert poly_to_dict(f) == {
            "rank": 2,
            "terms": [{"exponent": [1, 0], "coefficient": "2/3"}],
        }
        assert poly_from_dict(poly_to_dict(f)) == f
