"""
Coordinate changes between odd KdV times t_{2k-1} and Cauchy data q_k = Q_k(0).

q_k is linear in t_{2k-1}, q_k = L_k * t_{2k-1} + psi_k, with L_k a constant
multiple of q_{k-2} in t. Inverting recursively gives t_{2k-1} as an integer
Laurent polynomial in q_1..q_k.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List

from core.errors import BchlabError
from core.rings import (
    Family,
    LaurentPoly,
    NotDivisible,
    VarId,
    lau_exact_div,
    q,
    t,
)
from sequences.casoratian import gen_Q_t
from sequences.tau import TauSequence, normalizer
from sequences.xseq import even_gauge

logger = logging.getLogger(__name__)


class IntegralityViolation(BchlabError):
    """Custom exception for a coefficient outside the expected integer Laurent ring"""
    pass


@dataclass(frozen=True)
class ConversionTable:
    q_of_t: Dict[int, LaurentPoly] = field(default_factory=dict)
    t_of_q: Dict[int, LaurentPoly] = field(default_factory=dict)
    even_t_of_odd: Dict[int, LaurentPoly] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return len(self.q_of_t)

    def t_map(self, family: Family = Family.Q) -> Dict[VarId, LaurentPoly]:
        """t_{2k-1} -> Laurent image, with q renamed into ``family``."""
        if family == Family.Q:
            return {t(i): v for i, v in self.t_of_q.items()}
        rename = {q(k): LaurentPoly.var(VarId(family, k)) for k in range(1, self.N + 1)}
        return {t(i): v.substitute(rename) for i, v in self.t_of_q.items()}

    def q_map(self) -> Dict[VarId, LaurentPoly]:
        return {q(k): v for k, v in self.q_of_t.items()}

    def composition_residuals(self) -> Dict[int, LaurentPoly]:
        """t_of_q after q_of_t minus the identity, per odd index."""
        qmap = self.q_map()
        return {i: v.substitute(qmap) - LaurentPoly.var(t(i)) for i, v in self.t_of_q.items()}


def inverted_vars(family: Family, n: int) -> List[VarId]:
    return [VarId(family, k) for k in range(1, n - 1)]


@lru_cache(maxsize=None)
def q_from_t(N: int) -> Dict[int, LaurentPoly]:
    """q_k = Q_k(0) for k = 1..N as polynomials in odd times."""
    seq = gen_Q_t(N)
    return {k: seq[k].evaluate(0) for k in range(1, N + 1)}


@lru_cache(maxsize=None)
def t_from_q(N: int) -> Dict[int, LaurentPoly]:
    """t_{2k-1} for k = 1..N as Laurent polynomials in q_1..q_k."""
    q_of_t = q_from_t(N)
    t_of_q: Dict[int, LaurentPoly] = {}
    for k in range(1, N + 1):
        tv = t(2 * k - 1)
        expr = q_of_t[k]
        if expr.degree_in(tv) != 1:
            raise ArithmeticError(f"q_{k} is not linear in {tv}: degree {expr.degree_in(tv)}")
        lead = expr.coefficient_of(tv, 1)
        psi = expr - lead * LaurentPoly.var(tv)
        known = {t(i): v for i, v in t_of_q.items()}
        try:
            value = lau_exact_div(LaurentPoly.var(q(k)) - psi.substitute(known), lead.substitute(known))
        except NotDivisible as e:
            logger.error(f"Inversion for {tv} is not exact: {e}")
            raise
        t_of_q[2 * k - 1] = value
        logger.debug(f"{tv} = {value}")
    return t_of_q


@lru_cache(maxsize=None)
def conversion_table(N: int) -> ConversionTable:
    even, _ = even_gauge(max(N - 1, 0))
    return ConversionTable(q_of_t=q_from_t(N), t_of_q=t_from_q(N), even_t_of_odd=even)


def check_integrality(seq: TauSequence, family: Family) -> List[int]:
    """Indices n with A_n * entry outside Z[z; v_1^{+-}..v_{n-2}^{+-}, v_{n-1}, v_n]."""
    bad = []
    for n in range(1, seq.N + 1):
        scaled = seq[n].scale(normalizer(n))
        allowed = {VarId(family, k) for k in range(1, n + 1)}
        if not scaled.is_integral(inverted_vars(family, n)) or not set(scaled.variables()) <= allowed:
            bad.append(n)
    return bad


def to_q_coords(seq: TauSequence, table: ConversionTable, family: Family = Family.Q) -> TauSequence:
    mapping = table.t_map(family)
    entries = [entry.substitute(mapping) for entry in seq.entries]
    return seq.with_entries(entries, coords=family)


@lru_cache(maxsize=None)
def gen_Q_q(N: int) -> TauSequence:
    """Q_{-1} .. Q_N as polynomials in z with integer-Laurent (after A_n) coefficients in q."""
    seq = to_q_coords(gen_Q_t(N), conversion_table(N))
    bad = check_integrality(seq, Family.Q)
    if bad:
        raise IntegralityViolation(f"A_n * Q_n leaves the integer Laurent ring for n in {bad}")
    return seq
