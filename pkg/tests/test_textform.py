import json

import pytest
from hypothesis import given

from core.errors import ParseError
from core.rings import DivisionByZero, LaurentPoly, ZPoly, q
from core.textform import from_json, laurent_from_json, parse_laurent, parse_text, to_json, to_text
from tests.conftest import zpolys

Q1 = LaurentPoly.var(q(1))
Q2 = LaurentPoly.var(q(2))


def test_parse_expands_to_canonical_form():
    value = parse_text("z*(z^2 - 1)/3 + q1*z^2 + q1^2*z + q2")
    assert to_text(value) == "1/3*z^3 + q1*z^2 - 1/3*z + q1^2*z + q2"


def test_parse_negative_exponents_and_monomial_division():
    assert parse_laurent("q2^2/q1") == Q2 * Q2 * LaurentPoly.var(q(1), -1)
    assert parse_laurent("q1^-2") == LaurentPoly.var(q(1), -2)
    assert parse_laurent("-(q1 + 1)") == -(Q1 + 1)


def test_parse_exact_division_by_polynomial():
    assert parse_laurent("(q1^2 - q2^2)/(q1 - q2)") == Q1 + Q2


@pytest.mark.parametrize("text", ["z +", "q0", "x1", "1/z", "(q1 + 1)^-1", "q1/(q1 + 1)", "z^-1", "q1 q2"])
def test_malformed_or_inexact_input_raises_parse_error(text):
    with pytest.raises(ParseError):
        parse_text(text)


def test_division_by_zero_in_expression():
    with pytest.raises(DivisionByZero):
        parse_text("1/(q1 - q1)")


def test_parse_laurent_rejects_z():
    with pytest.raises(ParseError):
        parse_laurent("z + q1")


def test_json_layout():
    data = to_json(ZPoly([Q1, 1]))
    assert data == {"coeffs": [[{"z": 1}, "1"], [{"q1": 1}, "1"]]}
    assert json.loads(json.dumps(data)) == data


def test_json_keeps_rationals_and_negative_exponents():
    value = ZPoly([LaurentPoly.var(q(1), -1).scale(3), 0, LaurentPoly.constant(1).scale(1) / 3])
    assert from_json(json.dumps(to_json(value))) == value
    assert laurent_from_json(to_json(Q1 * Q2)) == Q1 * Q2


@pytest.mark.parametrize("text", ['{"coeffs": [[{"z": -1}, "1"]]}', '{"terms": []}', "not json", '{"coeffs": [[{"w1": 1}, "1"]]}'])
def test_malformed_json(text):
    with pytest.raises(ParseError):
        from_json(text)


@given(zpolys())
def test_canonical_text_parses_back(p):
    assert parse_text(to_text(p)) == p
