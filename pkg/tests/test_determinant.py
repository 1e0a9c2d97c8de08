from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from core.determinant import bareiss_det, det_expand
from core.rings import LaurentPoly, ZPOLY_ONE, ZPOLY_ZERO, ZPoly, q

ZERO, ONE = Fraction(0), Fraction(1)

square_matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@given(square_matrices)
def test_expansion_and_elimination_match_sympy(rows):
    expected = sympy.Matrix(rows).det()
    fractions = [[Fraction(v) for v in row] for row in rows]
    assert det_expand(fractions, ZERO, ONE) == expected
    assert bareiss_det(fractions, ZERO, ONE) == expected


def test_empty_matrix_has_determinant_one():
    assert det_expand([], ZERO, ONE) == 1
    assert bareiss_det([], ZERO, ONE) == 1


def test_pivoting_handles_zero_leading_entry():
    rows = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert bareiss_det(rows, ZERO, ONE) == -1
    assert det_expand(rows, ZERO, ONE) == -1


def test_non_square_raises():
    with pytest.raises(ValueError):
        det_expand([[ONE, ONE]], ZERO, ONE)
    with pytest.raises(ValueError):
        bareiss_det([[ONE, ONE]], ZERO, ONE)


def test_expansion_over_polynomial_entries():
    z = ZPoly.z()
    rows = [[ZPOLY_ONE, ZPOLY_ONE], [z, z + 1]]
    assert det_expand(rows, ZPOLY_ZERO, ZPOLY_ONE) == 1
    q1 = ZPoly.constant(LaurentPoly.var(q(1)))
    assert det_expand([[q1, z], [z, q1]], ZPOLY_ZERO, ZPOLY_ONE) == q1 * q1 - z * z
