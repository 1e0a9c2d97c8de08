"""
One-step solvers for the bilinear recurrences

    dbch:  f(z+1) g(z) - f(z) g(z+1) = h(z) h(z+1)
    bch:   f'(z) g(z) - f(z) g'(z)   = h(z)^2

with g = entry n-1, h = entry n and f = entry n+1 unknown.

Both operators send z^k to a polynomial of degree k+d-1 with leading
coefficient (k-d) g_d, where d = deg g, and both kill g. The particular
solution with no z^d term is found top-down; the multiple of g is then fixed
by f(0) = newconst.
"""
import logging
from typing import Callable, List, Optional, Sequence

from core.errors import BchlabError
from core.rings import (
    LAURENT_ZERO,
    Family,
    LaurentPoly,
    NotDivisible,
    ZPOLY_ONE,
    ZPoly,
    as_laurent,
    c,
    lau_exact_div,
    q,
)
from sequences.tau import SequenceKind, TauSequence, triangular

logger = logging.getLogger(__name__)


class NoPolynomialSolution(BchlabError):
    """Custom exception for a step with no polynomial solution of the declared degree"""
    pass


def dbch_operator(f: ZPoly, g: ZPoly) -> ZPoly:
    return f.shift(1) * g - f * g.shift(1)


def bch_operator(f: ZPoly, g: ZPoly) -> ZPoly:
    return f.derive() * g - f * g.derive()


def _solve_step(
    operator: Callable[[ZPoly, ZPoly], ZPoly],
    rhs: ZPoly,
    g: ZPoly,
    n: int,
    newconst,
) -> ZPoly:
    if not g:
        raise NoPolynomialSolution(f"Entry {n - 1} is zero")
    newconst = as_laurent(newconst)
    if newconst is None:
        raise TypeError(f"Unsupported constant for entry {n + 1}")
    d = int(g.degree)
    D = triangular(n + 1)
    g_lead = g.leading_coefficient()

    residual = rhs
    coeffs: List[LaurentPoly] = [LAURENT_ZERO] * (D + 1)
    for k in range(D, -1, -1):
        if k == d:
            continue
        pos = k + d - 1
        if pos < 0:
            continue
        target = residual.coeff(pos)
        if not target:
            continue
        try:
            a_k = lau_exact_div(target, g_lead.scale(k - d))
        except NotDivisible as e:
            raise NoPolynomialSolution(f"Coefficient of z^{k} in entry {n + 1} is not a Laurent polynomial: {e}") from e
        coeffs[k] = a_k
        residual = residual - operator(ZPoly.monomial(k, a_k), g)

    if residual:
        raise NoPolynomialSolution(
            f"Entry {n + 1} has no polynomial solution of degree {D}; residual degree {residual.degree}"
        )

    particular = ZPoly(coeffs)
    g0 = g.evaluate(0)
    p0 = particular.evaluate(0)
    if g0:
        try:
            multiple = lau_exact_div(newconst - p0, g0)
        except NotDivisible as e:
            raise NoPolynomialSolution(f"Cannot pin entry {n + 1} at z = 0: {e}") from e
        result = particular + g.scale(multiple)
    else:
        if newconst != p0:
            raise NoPolynomialSolution(
                f"Entry {n - 1} vanishes at z = 0, so entry {n + 1}(0) is forced to {p0}, not {newconst}"
            )
        result = particular

    if result.degree != D:
        raise NoPolynomialSolution(f"Entry {n + 1} has degree {result.degree}, expected {D}")
    return result


def step_dbch(Qprev: ZPoly, Qcur: ZPoly, n: int, newconst) -> ZPoly:
    """Q_{n+1} from Q_{n-1}, Q_n and Q_{n+1}(0) = newconst."""
    rhs = Qcur * Qcur.shift(1)
    result = _solve_step(dbch_operator, rhs, Qprev, n, newconst)
    logger.info(f"dBCh step: Q_{n + 1} of degree {result.degree}")
    return result


def step_bch(Pprev: ZPoly, Pcur: ZPoly, n: int, newconst) -> ZPoly:
    """P_{n+1} from P_{n-1}, P_n and P_{n+1}(0) = newconst."""
    rhs = Pcur * Pcur
    result = _solve_step(bch_operator, rhs, Pprev, n, newconst)
    logger.info(f"BCh step: P_{n + 1} of degree {result.degree}")
    return result


def _chain(step, N: int, consts: Sequence) -> List[ZPoly]:
    if len(consts) < N:
        raise ValueError(f"Need {N} constants, got {len(consts)}")
    entries = [ZPOLY_ONE, ZPOLY_ONE]
    for n in range(0, N):
        entries.append(step(entries[-2], entries[-1], n, consts[n]))
    return entries


def dbch_chain(N: int, consts: Optional[Sequence] = None) -> TauSequence:
    """Q_{-1} .. Q_N from Q_{-1} = Q_0 = 1; constants default to the symbols q_1..q_N."""
    if consts is None:
        consts = [LaurentPoly.var(q(k)) for k in range(1, N + 1)]
        coords = Family.Q
    else:
        coords = _family_of(consts)
    entries = _chain(step_dbch, N, consts)
    kind = SequenceKind.ZERO_DATA_Q0 if all(not as_laurent(v) for v in consts) else SequenceKind.DIFFERENCE_Q
    return TauSequence(kind, coords, tuple(entries))


def bch_chain(N: int, consts: Optional[Sequence] = None) -> TauSequence:
    """P_{-1} .. P_N from P_{-1} = P_0 = 1; constants default to the symbols c_1..c_N."""
    if consts is None:
        consts = [LaurentPoly.var(c(k)) for k in range(1, N + 1)]
        coords = Family.C
    else:
        coords = _family_of(consts)
    entries = _chain(step_bch, N, consts)
    return TauSequence(SequenceKind.CLASSICAL_P, coords, tuple(entries))


def _family_of(consts: Sequence) -> Family:
    families = {f for v in consts for f in as_laurent(v).families()}
    return families.pop() if len(families) == 1 else Family.Q
