from fractions import Fraction

import pytest

from core.rings import LaurentPoly, ZPoly, t
from core.textform import parse_laurent
from sequences.tau import Gauge
from sequences.xseq import even_gauge, gen_x, t_from_x, x_det

Z = ZPoly.z()
T1 = ZPoly.constant(LaurentPoly.var(t(1)))
T2 = ZPoly.constant(LaurentPoly.var(t(2)))


def test_first_entries():
    x = gen_x(2)
    assert x[0] == 1
    assert x[1] == Z + T1
    assert x[2] == ((Z + T1) * (Z + T1) - Z - T2).scale(Fraction(1, 2))
    assert x[-1].is_zero()
    assert x.gauge == Gauge.RAW


def test_difference_lowers_the_index():
    assert gen_x(6).delta_violations() == []


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_determinant_route_matches_series(k):
    assert x_det(k) == gen_x(k)[k]


def test_newton_determinant_recovers_times():
    x = gen_x(4)
    values = [x[k].evaluate(0) for k in range(1, 5)]
    assert t_from_x(values) == [LaurentPoly.var(t(k)) for k in range(1, 5)]


def test_even_gauge():
    even, x = even_gauge(2)
    assert even[2] == parse_laurent("t1^2")
    assert even[4] == parse_laurent("4/3*t1*t3 - 1/3*t1^4")
    assert x.gauge == Gauge.EVEN_FIXED
    assert x[2].evaluate(0) == 0
    assert x[4].evaluate(0) == 0
    assert x.delta_violations() == []
    assert all(v.index % 2 for v in x[5].variables())


def test_bad_arguments():
    with pytest.raises(ValueError):
        gen_x(0)
    with pytest.raises(ValueError):
        x_det(0)
