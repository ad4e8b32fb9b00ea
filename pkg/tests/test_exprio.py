"""Grammar, diagnostics, and structured-document round trips."""

import pytest
from hypothesis import given

from veronese import (XY, Automorphism2, Derivation2, DerivationV,
                      AutomorphismV, ParseError, Poly, SchemaError,
                      UnknownVariable, dumps, loads, parse_poly, print_poly,
                      read_map, write_map, x_ring)

from conftest import big_polys, polys, xy_polys


class TestParse:
    def test_mixed_coefficients(self):
        from fractions import Fraction

        p = parse_poly("3/2*x^2*y - y^3", XY)
        assert p.terms == {(2, 1): Fraction(3, 2), (0, 3): Fraction(-1)}
        assert print_poly(p) == "3/2*x^2*y - y^3"

    def test_relation_over_big_ring(self):
        p = parse_poly("X0*X2 - X1^2", x_ring(2))
        assert p == Poly(x_ring(2), {(1, 0, 1): 1, (0, 2, 0): -1})

    def test_malformed_offset(self):
        with pytest.raises(ParseError) as info:
            parse_poly("x + * y", XY)
        assert info.value.diagnostic.offset == 4

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable) as info:
            parse_poly("x + z^2", XY)
        assert info.value.varname == "z"
        assert info.value.diagnostic.offset == 4
        assert info.value.name == "ParseError"  # CLI-visible name

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("2x", XY)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError) as info:
            parse_poly("x + y )", XY)
        assert info.value.diagnostic.offset == 6

    def test_unexpected_end(self):
        with pytest.raises(ParseError) as info:
            parse_poly("x ^", XY)
        assert info.value.diagnostic.offset == 3

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_poly("1/0*x", XY)

    def test_whitespace_insignificant(self):
        assert parse_poly(" x ^ 2 * y ", XY) == parse_poly("x^2*y", XY)

    def test_leading_minus_and_constants(self):
        assert parse_poly("-x + 2", XY) == Poly(XY, {(1, 0): -1, (0, 0): 2})
        assert parse_poly("0", XY) == Poly.zero(XY)

    def test_ring_validation(self):
        with pytest.raises(ValueError):
            parse_poly("x", ("x", "x"))
        with pytest.raises(ValueError):
            parse_poly("x", ("x", "2bad"))


class TestPrint:
    def test_descending_lex(self):
        assert print_poly(parse_poly("y^2 + x^2 - x*y", XY)) == "x^2 - x*y + y^2"

    def test_zero(self):
        assert print_poly(Poly.zero(XY)) == "0"

    def test_unit_coefficients_suppressed(self):
        assert print_poly(Poly(XY, {(1, 1): 1, (0, 2): -1})) == "x*y - y^2"

    @given(xy_polys(max_terms=6, max_exp=7))
    def test_parse_after_print(self, p):
        assert parse_poly(print_poly(p), XY) == p

    @given(big_polys(3, max_terms=5, max_exp=4))
    def test_parse_after_print_big_ring(self, p):
        assert parse_poly(print_poly(p), x_ring(3)) == p


class TestDocuments:
    def test_derivation_v_round_trip(self):
        doc = {"kind": "derivationV", "n": 2, "images": ["2*x*y", "y^2", "0"]}
        obj = read_map(doc)
        assert isinstance(obj, DerivationV)
        assert [str(p) for p in obj.images] == ["2*x*y", "y^2", "0"]
        assert write_map(obj) == doc

    def test_automorphism_pair(self):
        obj = read_map({"n": 2, "kind": "automorphism2", "fx": "x+y^3", "fy": "y"})
        assert isinstance(obj, Automorphism2)
        assert str(obj) == "(x + y^3, y)"

    def test_derivation_pair(self):
        obj = read_map({"kind": "derivation2", "fx": "y", "fy": "0"})
        assert isinstance(obj, Derivation2)

    def test_automorphism_v(self):
        obj = read_map({"kind": "automorphismV", "n": 2,
                        "images": ["x^2", "x*y", "y^2"]})
        assert isinstance(obj, AutomorphismV)

    def test_missing_images(self):
        with pytest.raises(SchemaError) as info:
            read_map({"kind": "derivationV", "n": 2})
        assert info.value.field == "images"

    def test_missing_kind(self):
        with pytest.raises(SchemaError) as info:
            read_map({"fx": "x", "fy": "y"})
        assert info.value.field == "kind"

    def test_wrong_image_count(self):
        with pytest.raises(SchemaError) as info:
            read_map({"kind": "derivationV", "n": 2, "images": ["0", "0"]})
        assert info.value.field == "images"

    def test_bad_entry_type(self):
        with pytest.raises(SchemaError) as info:
            read_map({"kind": "derivationV", "n": 2, "images": ["0", 1, "0"]})
        assert info.value.field == "images[1]"

    def test_n_too_small(self):
        with pytest.raises(SchemaError):
            read_map({"kind": "derivationV", "n": 1, "images": ["0", "0"]})

    def test_unknown_kind(self):
        with pytest.raises(SchemaError) as info:
            read_map({"kind": "matrix"})
        assert info.value.field == "kind"

    def test_loads_rejects_bad_json(self):
        with pytest.raises(SchemaError):
            loads("{not json")
        with pytest.raises(SchemaError):
            loads("[1, 2]")

    def test_dumps_is_canonical(self):
        doc = {"b": 1, "a": [2]}
        assert dumps(doc) == dumps({"a": [2], "b": 1})

    @given(xy_polys(max_terms=3), xy_polys(max_terms=3))
    def test_pair_docs_round_trip(self, fx, fy):
        for kind in (Derivation2, Automorphism2):
            obj = kind(fx, fy)
            assert read_map(loads(dumps(write_map(obj)))) == obj
