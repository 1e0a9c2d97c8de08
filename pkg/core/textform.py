"""
Text and JSON forms for LaurentPoly and ZPoly.

The text grammar accepts the canonical output of ``str()`` and a little more:
``+ - * / ^``, parentheses, integer literals (so ``1/3`` is a rational),
variables ``z``, ``t<k>``, ``q<k>``, ``c<k>``, ``s<k>``. Division is exact
division by a z-free divisor.
"""
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Union

import pyparsing as pp

from core.errors import ParseError
from core.rings import (
    DivisionByZero,
    Family,
    LaurentPoly,
    NotDivisible,
    VarId,
    ZPoly,
)

logger = logging.getLogger(__name__)

_FAMILY_BY_LETTER = {"t": Family.T, "q": Family.Q, "c": Family.C, "s": Family.S}


class _Node:
    __slots__ = ("kind", "args")

    def __init__(self, kind: str, *args):
        self.kind = kind
        self.args = args


def _var_id(name: str) -> VarId:
    return VarId(_FAMILY_BY_LETTER[name[0]], int(name[1:]))


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    number = pp.Word(pp.nums).set_parse_action(lambda tk: _Node("num", int(tk[0])))
    variable = pp.Regex(r"(?:z|[tqcs][1-9][0-9]*)(?![A-Za-z0-9_])").set_parse_action(
        lambda tk: _Node("var", tk[0])
    )
    atom = number | variable | (pp.Suppress("(") + expr + pp.Suppress(")"))
    exponent = pp.Regex(r"[+-]?[0-9]+")
    power = (atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(
        lambda tk: _Node("pow", tk[0], int(tk[1])) if len(tk) > 1 else tk[0]
    )
    signed = (pp.Optional(pp.one_of("+ -")) + power).set_parse_action(
        lambda tk: _Node("neg", tk[1]) if len(tk) > 1 and tk[0] == "-" else tk[-1]
    )
    term = (signed + pp.ZeroOrMore(pp.one_of("* /") + signed)).set_parse_action(
        lambda tk: _Node("term", list(tk))
    )
    expr <<= (term + pp.ZeroOrMore(pp.one_of("+ -") + term)).set_parse_action(
        lambda tk: _Node("sum", list(tk))
    )
    return expr


_GRAMMAR = _build_grammar()


def _evaluate(node: _Node) -> ZPoly:
    if node.kind == "num":
        return ZPoly.constant(node.args[0])
    if node.kind == "var":
        name = node.args[0]
        if name == "z":
            return ZPoly.z()
        return ZPoly.constant(LaurentPoly.var(_var_id(name)))
    if node.kind == "neg":
        return -_evaluate(node.args[0])
    if node.kind == "pow":
        base = _evaluate(node.args[0])
        k = node.args[1]
        if k >= 0:
            return base ** k
        if base.degree > 0:
            raise ParseError("Negative power of a z-dependent expression")
        try:
            return ZPoly.constant(base.coeff(0) ** k)
        except NotDivisible as e:
            raise ParseError(f"Negative power of a non-monomial: {base}") from e
    if node.kind == "term":
        items = node.args[0]
        value = _evaluate(items[0])
        for op, operand in zip(items[1::2], items[2::2]):
            rhs = _evaluate(operand)
            if op == "*":
                value = value * rhs
                continue
            if rhs.degree > 0:
                raise ParseError(f"Division by a z-dependent expression: {rhs}")
            divisor = rhs.coeff(0)
            if not divisor:
                raise DivisionByZero("Division by zero in expression")
            try:
                value = value.exact_div(divisor)
            except NotDivisible as e:
                raise ParseError(f"Inexact division by {divisor}") from e
        return value
    if node.kind == "sum":
        items = node.args[0]
        value = _evaluate(items[0])
        for op, operand in zip(items[1::2], items[2::2]):
            value = value + _evaluate(operand) if op == "+" else value - _evaluate(operand)
        return value
    raise ParseError(f"Unknown node kind {node.kind}")


def parse_text(text: str) -> ZPoly:
    """Parse an expression into a ZPoly; raises ParseError on malformed input."""
    try:
        result = _GRAMMAR.parse_string(text.strip(), parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError(f"Cannot parse {text!r}: {e}") from e
    return _evaluate(result[0])


def parse_laurent(text: str) -> LaurentPoly:
    value = parse_text(text)
    if value.degree > 0:
        raise ParseError(f"Expected a z-free expression, got {text!r}")
    return value.coeff(0)


def to_text(value: Union[LaurentPoly, ZPoly, Fraction, int]) -> str:
    return str(value)


def _exponent_map(mono, z_power: int = 0) -> Dict[str, int]:
    out: Dict[str, int] = {}
    if z_power:
        out["z"] = z_power
    for v, e in mono:
        out[str(v)] = e
    return out


def to_json(value: Union[LaurentPoly, ZPoly]) -> Dict[str, Any]:
    """JSON-ready dict ``{"coeffs": [[exponent-map, "p/q"], ...]}`` in canonical order."""
    coeffs: List[List[Any]] = []
    if isinstance(value, LaurentPoly):
        for mono, cf in value.sorted_terms():
            coeffs.append([_exponent_map(mono), str(cf)])
    else:
        for i in range(len(value.coeffs) - 1, -1, -1):
            for mono, cf in value.coeffs[i].sorted_terms():
                coeffs.append([_exponent_map(mono, i), str(cf)])
    return {"coeffs": coeffs}


def from_json(data: Union[str, Dict[str, Any]]) -> ZPoly:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON: {e}") from e
    try:
        entries = data["coeffs"]
        by_power: Dict[int, Dict] = {}
        for exps, cf in entries:
            exps = dict(exps)
            k = int(exps.pop("z", 0))
            if k < 0:
                raise ParseError("Negative power of z in JSON form")
            mono = tuple(sorted((_var_id(name), int(e)) for name, e in exps.items()))
            bucket = by_power.setdefault(k, {})
            bucket[mono] = bucket.get(mono, 0) + Fraction(cf)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed polynomial JSON: {e}") from e
    top = max(by_power, default=-1)
    return ZPoly([LaurentPoly(by_power.get(i, {})) for i in range(top + 1)])


def laurent_from_json(data: Union[str, Dict[str, Any]]) -> LaurentPoly:
    value = from_json(data)
    if value.degree > 0:
        raise ParseError("Expected a z-free polynomial in JSON form")
    return value.coeff(0)
