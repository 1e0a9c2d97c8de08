from fractions import Fraction

import pytest

from core.rings import Family, LaurentPoly, ZPOLY_ONE, ZPoly, c, q, t
from core.textform import parse_laurent
from sequences.conversion import (
    check_integrality,
    conversion_table,
    gen_Q_q,
    inverted_vars,
    q_from_t,
    t_from_q,
)
from sequences.tau import SequenceKind, TauSequence, normalizer


def test_linear_in_the_newest_time():
    q_of_t = q_from_t(4)
    for k in range(1, 5):
        assert q_of_t[k].degree_in(t(2 * k - 1)) == 1


def test_inverse_is_laurent_in_cauchy_data():
    t_of_q = t_from_q(3)
    assert sorted(t_of_q) == [1, 3, 5]
    assert t_of_q[3] == parse_laurent("-3*q2 + q1^3")
    assert t_of_q[5].min_exponent(q(1)) == -1
    assert t_of_q[5].is_integral([q(1)])


def test_composition_is_identity():
    residuals = conversion_table(4).composition_residuals()
    assert sorted(residuals) == [1, 3, 5, 7]
    assert all(r.is_zero() for r in residuals.values())


def test_renaming_into_c_coordinates():
    table = conversion_table(2)
    assert table.t_map(Family.C)[t(3)] == parse_laurent("-3*c2 + c1^3")
    assert table.q_map()[q(2)] == parse_laurent("-1/3*t3 + 1/3*t1^3")


def test_q_sequence_is_pinned_at_zero():
    seq = gen_Q_q(3)
    assert seq.coords == Family.Q
    for n in range(1, 4):
        assert seq[n].evaluate(0) == LaurentPoly.var(q(n))


def test_integrality_holds_up_to_four():
    assert check_integrality(gen_Q_q(4), Family.Q) == []


@pytest.mark.slow
def test_integrality_holds_up_to_six():
    assert check_integrality(gen_Q_q(6), Family.Q) == []


def test_integrality_check_flags_bad_entries():
    half = ZPoly([LaurentPoly.var(q(1)), Fraction(1, 2)])
    inverse = ZPoly([LaurentPoly.var(q(1), -1), 1])
    for entry in (half, inverse):
        seq = TauSequence(SequenceKind.DIFFERENCE_Q, Family.Q, (ZPOLY_ONE, ZPOLY_ONE, entry))
        assert check_integrality(seq, Family.Q) == [1]


def test_inverted_variables_stop_two_below():
    assert inverted_vars(Family.C, 4) == [c(1), c(2)]
    assert inverted_vars(Family.Q, 2) == []
    assert normalizer(4) == 4725
