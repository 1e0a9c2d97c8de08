"""Q^0_n: the difference polynomials with zero Cauchy data."""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

from core.rings import Family, ZPOLY_ONE, ZPoly
from sequences.casoratian import sym_casoratian
from sequences.tau import SequenceKind, TauSequence, double_factorial, normalizer, triangular

logger = logging.getLogger(__name__)

ROUTES = ("recur", "expli")


def _linear(shift: int) -> ZPoly:
    return ZPoly([shift, 1])


@lru_cache(maxsize=None)
def _q0_recur(n: int) -> ZPoly:
    if n == 0:
        return ZPOLY_ONE
    product = ZPOLY_ONE
    for j in range(1, n + 1):
        product = product * _linear(n + 1 - 2 * j)
    return (product * _q0_recur(n - 1)).scale(Fraction(1, double_factorial(2 * n - 1)))


def _q0_expli(n: int) -> ZPoly:
    if n == 0:
        return ZPOLY_ONE
    result = ZPoly.monomial((n + 1) // 2)
    for j in range(1, n):
        result = result * ZPoly([-j * j, 0, 1]) ** ((n + 1 - j) // 2)
    return result.scale(Fraction(1, normalizer(n)))


def q0_closed(n: int, route: str = "recur") -> ZPoly:
    """Q^0_n by the product recurrence or by the explicit factorization."""
    if n < 0:
        raise ValueError(f"q0_closed needs n >= 0, got {n}")
    if route == "recur":
        return _q0_recur(n)
    if route == "expli":
        return _q0_expli(n)
    raise ValueError(f"Unknown route {route!r}, expected one of {ROUTES}")


def q0_sequence(N: int, route: str = "recur") -> TauSequence:
    entries = [ZPOLY_ONE] + [q0_closed(n, route) for n in range(0, N + 1)]
    return TauSequence(SequenceKind.ZERO_DATA_Q0, Family.Q, tuple(entries))


def odd_monomials(n: int) -> List[ZPoly]:
    """f_j = z^{2j-1} / (2j-1)! for j = 1..n"""
    return [ZPoly.monomial(2 * j - 1, Fraction(1, factorial(2 * j - 1))) for j in range(1, n + 1)]


def expected_sym_ratio(n: int) -> Fraction:
    """(-1)^{n(n-1)/2} 2^{-n(n-1)/2}, from the Vandermonde evaluation of C*."""
    e = triangular(n - 1)
    return Fraction((-1) ** e, 2 ** e)


def sym_casoratian_ratio(n: int) -> Fraction:
    """
    The constant r with Q^0_n = r * C*(f_1..f_n).

    Raises ArithmeticError when the two are not exactly proportional.
    """
    cstar = sym_casoratian(odd_monomials(n))
    q0 = q0_closed(n)
    if cstar.degree != q0.degree:
        raise ArithmeticError(f"C* has degree {cstar.degree}, Q0_{n} has degree {q0.degree}")
    ratio = q0.leading_coefficient().constant_value() / cstar.leading_coefficient().constant_value()
    if cstar.scale(ratio) != q0:
        raise ArithmeticError(f"C*(f_1..f_{n}) is not proportional to Q0_{n}")
    logger.info(f"Q0_{n} = {ratio} * C*; the 2^(-n(n+1)/2) normalization would give {Fraction(1, 2 ** triangular(n))}")
    return ratio
