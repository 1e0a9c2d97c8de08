import pytest

from core.rings import Family, LaurentPoly, ZPOLY_ONE, ZPoly, t
from sequences.casoratian import (
    bracket,
    casoratian,
    casoratian_reduction_check,
    gen_Q_t,
    jacobi_residual,
    odd_x,
    raw_q_from_t_independence,
    sym_casoratian,
)
from sequences.tau import SequenceKind
from sequences.xseq import gen_x

Z = ZPoly.z()


def test_casoratian_of_small_families():
    assert casoratian([ZPOLY_ONE, Z]) == 1
    assert casoratian([Z]) == Z
    assert casoratian([]) == 1
    assert sym_casoratian([Z]) == Z


def test_bracket_is_antisymmetric():
    a, b = Z * Z, Z + 3
    assert bracket(a, a).is_zero()
    assert bracket(a, b) == -bracket(b, a)


def test_sequence_shape():
    seq = gen_Q_t(3)
    assert seq.kind == SequenceKind.DIFFERENCE_Q
    assert seq.coords == Family.T
    assert seq[-1] == 1 and seq[0] == 1
    assert seq.degree_violations() == []


def test_top_coefficient_is_one_over_normalizer():
    seq = gen_Q_t(3)
    for n in range(1, 4):
        assert seq[n].leading_coefficient() * seq.normalizers[n] == 1


def test_routes_agree():
    assert gen_Q_t(4, "casoratian").entries == gen_Q_t(4, "det3").entries


def test_unknown_route():
    with pytest.raises(ValueError):
        gen_Q_t(2, "wronskian")


def test_even_times_drop_out_of_raw_casoratians():
    assert raw_q_from_t_independence(3) == set()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_appending_the_constant_function(k):
    assert casoratian_reduction_check(k).is_zero()


@pytest.mark.parametrize("k", [0, 1])
def test_jacobi_identity(k):
    x = gen_x(5)
    assert jacobi_residual(odd_x(x, k + 1), x[2], k).is_zero()


def generic_quadratic(first: int) -> ZPoly:
    return ZPoly([LaurentPoly.var(t(first + i)) for i in range(3)])


def test_jacobi_identity_for_generic_quadratics():
    phis = [generic_quadratic(1), generic_quadratic(4), generic_quadratic(7)]
    assert jacobi_residual(phis, generic_quadratic(10), 2).is_zero()


def test_jacobi_needs_enough_functions():
    with pytest.raises(ValueError):
        jacobi_residual([Z], Z, 1)
