"""
Continuum limit of the difference sequence.

eps^{n(n+1)/2} Q_n(x/eps, t_{2k-1}/eps^{2k-1}) is polynomial in eps, so the
limit eps -> 0 is the weight-n(n+1)/2 component of Q_n under w(z) = 1,
w(t_k) = k. Cauchy data are homogeneous of top weight, so c_k = q_k.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Union

from core.rings import Family, LaurentPoly, ZPoly, weight_component
from sequences.casoratian import gen_Q_t
from sequences.conversion import ConversionTable, IntegralityViolation, check_integrality, conversion_table
from sequences.tau import SequenceKind, TauSequence, triangular

logger = logging.getLogger(__name__)


def continuum_limit(Q_t: ZPoly, n: int, table: ConversionTable) -> ZPoly:
    """P_n in c-coordinates from Q_n in odd times."""
    top = top_weight_in_t(Q_t, n)
    if top.degree != triangular(n):
        raise ArithmeticError(f"Top-weight part of Q_{n} has degree {top.degree}, expected {triangular(n)}")
    return top.substitute(table.t_map(Family.C))


def top_weight_in_t(Q_t: ZPoly, n: int) -> ZPoly:
    return weight_component(Q_t, triangular(n))


@lru_cache(maxsize=None)
def classical_P(N: int) -> TauSequence:
    """P_{-1} .. P_N via the continuum limit."""
    seq_t = gen_Q_t(N)
    table = conversion_table(N)
    entries = list(seq_t.entries[:2])
    for n in range(1, N + 1):
        entries.append(continuum_limit(seq_t[n], n, table))
        logger.info(f"Continuum limit P_{n}: degree {entries[-1].degree}")
    seq = TauSequence(SequenceKind.CLASSICAL_P, Family.C, tuple(entries))
    bad = check_integrality(seq, Family.C)
    if bad:
        raise IntegralityViolation(f"A_n * P_n leaves the integer Laurent ring for n in {bad}")
    return seq


def kdv_times(odd_t: Mapping[int, Union[int, Fraction, LaurentPoly]]) -> Dict[int, Union[Fraction, LaurentPoly]]:
    """T_k = t_{2k+1} / (4^k (2k+1)) for every odd index 2k+1 present."""
    result: Dict[int, Union[Fraction, LaurentPoly]] = {}
    for index, value in sorted(odd_t.items()):
        if index % 2 == 0:
            raise ValueError(f"KdV times come from odd indices, got t_{index}")
        k = (index - 1) // 2
        scale = Fraction(1, 4 ** k * (2 * k + 1))
        result[k] = value.scale(scale) if isinstance(value, LaurentPoly) else Fraction(value) * scale
    return result
