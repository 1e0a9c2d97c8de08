import pytest

from core.rings import Family, LaurentPoly, ZPOLY_ONE, ZPoly, c, q
from sequences.conversion import gen_Q_q
from sequences.steps import NoPolynomialSolution, bch_chain, dbch_chain, step_bch, step_dbch
from sequences.tau import SequenceKind
from sequences.zero_data import q0_closed

Z = ZPoly.z()


def test_first_steps():
    q1 = LaurentPoly.var(q(1))
    assert step_dbch(ZPOLY_ONE, ZPOLY_ONE, 0, q1) == Z + q1
    assert step_bch(ZPOLY_ONE, ZPOLY_ONE, 0, LaurentPoly.var(c(1))) == Z + LaurentPoly.var(c(1))


def test_recurrence_matches_casoratian_route():
    assert dbch_chain(3).entries == gen_Q_q(3).entries


@pytest.mark.slow
def test_recurrence_matches_casoratian_route_to_five():
    assert dbch_chain(5).entries == gen_Q_q(5).entries


def test_zero_constants_give_zero_data_polynomials():
    seq = dbch_chain(6, [0] * 6)
    assert seq.kind == SequenceKind.ZERO_DATA_Q0
    for n in range(1, 7):
        assert seq[n] == q0_closed(n)


def test_default_coordinates():
    assert dbch_chain(2).coords == Family.Q
    assert bch_chain(2).coords == Family.C
    assert bch_chain(1)[1] == Z + LaurentPoly.var(c(1))


def test_value_at_zero_is_forced_when_previous_entry_vanishes_there():
    with pytest.raises(NoPolynomialSolution):
        step_dbch(q0_closed(1), q0_closed(2), 2, 5)


def test_inconsistent_right_hand_side():
    with pytest.raises(NoPolynomialSolution):
        step_dbch(ZPOLY_ONE, Z * Z, 0, 0)


def test_too_few_constants():
    with pytest.raises(ValueError):
        dbch_chain(3, [0, 0])
