import os
from fractions import Fraction
from pathlib import Path

import hypothesis
import pytest
import sympy
from hypothesis import strategies as st

from core.rings import LaurentPoly, VarId, ZPoly, q

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "golden"

Z = sympy.Symbol("z")


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


def _sym(v: VarId) -> sympy.Symbol:
    return sympy.Symbol(str(v))


def to_sympy(value) -> sympy.Expr:
    """Independent rendering of LaurentPoly/ZPoly/Fraction values as sympy expressions."""
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, LaurentPoly):
        expr = sympy.Integer(0)
        for mono, coef in value.terms.items():
            term = sympy.Rational(coef.numerator, coef.denominator)
            for v, e in mono:
                term *= _sym(v) ** e
            expr += term
        return expr
    if isinstance(value, ZPoly):
        return sum((to_sympy(cf) * Z ** i for i, cf in enumerate(value.coeffs)), sympy.Integer(0))
    raise TypeError(f"Cannot convert {value!r}")


def sympy_equal(a, b) -> bool:
    return sympy.expand(a - b) == 0


@st.composite
def laurent_polys(draw, max_terms: int = 4, low: int = -2, high: int = 2):
    """Sparse Laurent polynomials in q1, q2 with small integer coefficients."""
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        e1 = draw(st.integers(min_value=low, max_value=high))
        e2 = draw(st.integers(min_value=low, max_value=high))
        coef = draw(st.integers(min_value=-5, max_value=5))
        mono = tuple((v, e) for v, e in ((q(1), e1), (q(2), e2)) if e)
        terms[mono] = terms.get(mono, 0) + coef
    return LaurentPoly(terms)


@st.composite
def zpolys(draw, max_degree: int = 3):
    degree = draw(st.integers(min_value=0, max_value=max_degree))
    return ZPoly([draw(laurent_polys(max_terms=2)) for _ in range(degree + 1)])
