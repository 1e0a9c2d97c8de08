from fractions import Fraction

import pytest

from core.rings import ZPoly
from sequences.casoratian import gen_Q_t
from sequences.tau import triangular
from sequences.zero_data import expected_sym_ratio, q0_closed, q0_sequence, sym_casoratian_ratio

Z = ZPoly.z()


@pytest.mark.parametrize("n", range(0, 7))
def test_closed_forms_agree(n):
    assert q0_closed(n, "recur") == q0_closed(n, "expli")


@pytest.mark.parametrize("n", range(1, 7))
def test_vanishes_at_zero_with_triangular_degree(n):
    value = q0_closed(n)
    assert value.evaluate(0) == 0
    assert value.degree == triangular(n)


def test_small_cases():
    assert q0_closed(1) == Z
    assert q0_closed(2) == (Z * Z * Z - Z).scale(Fraction(1, 3))


@pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)])
def test_casoratian_at_zero_times(n):
    entry = gen_Q_t(n)[n]
    at_zero = entry.evaluate_vars({v: 0 for v in entry.variables()})
    assert at_zero == q0_closed(n)


def test_sequence_wrapper():
    seq = q0_sequence(3, "expli")
    assert seq.N == 3
    assert seq[3] == q0_closed(3)


@pytest.mark.parametrize("n, ratio", [(1, Fraction(1)), (2, Fraction(-1, 2)), (3, Fraction(-1, 8)), (4, Fraction(1, 64))])
def test_symmetric_casoratian_constant(n, ratio):
    assert sym_casoratian_ratio(n) == ratio == expected_sym_ratio(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_symmetric_casoratian_constant_large(n):
    assert sym_casoratian_ratio(n) == expected_sym_ratio(n)


def test_bad_route():
    with pytest.raises(ValueError):
        q0_closed(2, "guess")
    with pytest.raises(ValueError):
        q0_closed(-1)
