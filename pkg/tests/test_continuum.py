from fractions import Fraction

import pytest

from core.rings import Family, LaurentPoly, t
from core.textform import parse_text
from sequences.casoratian import gen_Q_t
from sequences.continuum import classical_P, continuum_limit, kdv_times, top_weight_in_t
from sequences.conversion import check_integrality, conversion_table
from sequences.steps import bch_chain


def test_first_limit_is_already_homogeneous():
    assert continuum_limit(gen_Q_t(1)[1], 1, conversion_table(1)) == parse_text("z + c1")


def test_top_weight_of_second_entry():
    expected = parse_text("(z^3 + 3*t1*z^2 + 3*t1^2*z + t1^3 - t3)/3")
    assert top_weight_in_t(gen_Q_t(2)[2], 2) == expected


def test_limit_agrees_with_classical_recurrence():
    assert classical_P(4).entries == bch_chain(4).entries


def test_limit_is_integral_after_normalizer():
    seq = classical_P(4)
    assert seq.coords == Family.C
    assert check_integrality(seq, Family.C) == []


@pytest.mark.slow
def test_limit_agrees_with_classical_recurrence_to_six():
    assert classical_P(6).entries == bch_chain(6).entries


def test_kdv_time_scaling():
    times = kdv_times({1: 5, 3: 12, 5: LaurentPoly.var(t(5)).scale(80)})
    assert times[0] == 5
    assert times[1] == 1
    assert times[2] == LaurentPoly.var(t(5))
    assert kdv_times({7: 7 * 64})[3] == Fraction(1)
    with pytest.raises(ValueError):
        kdv_times({2: 1})
