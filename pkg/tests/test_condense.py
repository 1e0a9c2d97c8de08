import random
from fractions import Fraction

import pytest
import sympy

from lattice.condense import bareiss_det, dodgson_condense
from lattice.matrix_io import MatrixFormatError, format_matrix, identity, load_matrix, parse_matrix, random_matrix
from lattice.octahedral import dodgson_plane, octahedral_verify
from sequences.conversion import gen_Q_q
from sequences.relations import to_dodgson_R


def _sympy_det(matrix):
    return Fraction(int(sympy.Matrix([[int(v) for v in row] for row in matrix]).det()))


def test_two_by_two():
    value, pyramid = dodgson_condense([[1, 2], [3, 4]])
    assert value == -2
    assert pyramid.fallbacks == []


def test_zero_interior_falls_back_to_elimination():
    value, pyramid = dodgson_condense([[1, 2, 3], [4, 0, 6], [7, 8, 9]])
    assert value == 60
    assert pyramid.fallbacks == [(2, 0, 0)]


def test_identity():
    assert dodgson_condense(identity(3))[1].fallbacks == []
    value, pyramid = dodgson_condense(identity(4))
    assert value == 1
    assert pyramid.fallbacks


def test_one_by_one():
    value, pyramid = dodgson_condense([[7]])
    assert value == 7
    assert pyramid.N == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_random_matrices_agree(n):
    rng = random.Random(n)
    for _ in range(5):
        matrix = random_matrix(n, rng, zero_bias=0.5)
        value, _ = dodgson_condense(matrix)
        assert value == bareiss_det(matrix) == _sympy_det(matrix)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 9))
def test_random_matrices_agree_many(n):
    rng = random.Random(1000 + n)
    for _ in range(200):
        matrix = random_matrix(n, rng, zero_bias=0.5)
        assert dodgson_condense(matrix)[0] == bareiss_det(matrix)


def test_pyramid_satisfies_octahedral_recurrence():
    matrix = random_matrix(5, random.Random(7))
    _, pyramid = dodgson_condense(matrix)
    report = octahedral_verify(pyramid)
    assert report.ok
    assert report.residuals


def test_dodgson_sequence_is_a_periodic_reduction():
    plane = dodgson_plane(to_dodgson_R(gen_Q_q(3)), range(-3, 4))
    report = octahedral_verify(plane, periodic=True)
    assert report.ok
    assert report.residuals


def test_broken_pyramid_is_reported():
    _, pyramid = dodgson_condense([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    pyramid.layers[1][0][0] += 1
    assert not octahedral_verify(pyramid).ok


def test_matrix_text_round_trip(tmp_path):
    matrix = [[Fraction(1, 2), Fraction(-3)], [Fraction(0), Fraction(5)]]
    path = tmp_path / "m.txt"
    path.write_text(format_matrix(matrix))
    assert load_matrix(path) == matrix


@pytest.mark.parametrize("text", ["", "x\n1\n", "2\n1 2\n", "2\n1 2\n3\n", "1\nabc\n", "1\n1/0\n"])
def test_bad_matrix_text(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_missing_matrix_file(tmp_path):
    with pytest.raises(MatrixFormatError):
        load_matrix(tmp_path / "absent.txt")
