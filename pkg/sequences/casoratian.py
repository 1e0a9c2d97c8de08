"""Casoratians and the Casoratian construction of the difference Q_n in odd times."""
import logging
from functools import lru_cache
from typing import List, Sequence, Set

from core.determinant import det_expand
from core.rings import Family, VarId, ZPOLY_ONE, ZPOLY_ZERO, ZPoly
from sequences.tau import SequenceKind, TauSequence, XSequence
from sequences.xseq import even_gauge, gen_x

logger = logging.getLogger(__name__)

ROUTES = ("casoratian", "det3")


def casoratian(fs: Sequence[ZPoly]) -> ZPoly:
    """C(f_1..f_n) = det || f_i(z + j - 1) ||"""
    rows = [[f.shift(j) for j in range(len(fs))] for f in fs]
    return det_expand(rows, ZPOLY_ZERO, ZPOLY_ONE)


def sym_casoratian(fs: Sequence[ZPoly]) -> ZPoly:
    """C*(f_1..f_n) = det || f_i(z + n + 1 - 2j) ||"""
    n = len(fs)
    rows = [[f.shift(n + 1 - 2 * j) for j in range(1, n + 1)] for f in fs]
    return det_expand(rows, ZPOLY_ZERO, ZPOLY_ONE)


def bracket(a: ZPoly, b: ZPoly) -> ZPoly:
    """[A, B] = A * TB - B * TA"""
    return a * b.shift(1) - b * a.shift(1)


def x_matrix_det(x: XSequence, k: int) -> ZPoly:
    """Q_k as det || x_{2j-i} || with x_0 = 1 and x of negative index 0"""
    rows = [[x[2 * j - i] for j in range(1, k + 1)] for i in range(1, k + 1)]
    return det_expand(rows, ZPOLY_ZERO, ZPOLY_ONE)


def odd_x(x: XSequence, k: int) -> List[ZPoly]:
    """y_1 .. y_k with y_j = x_{2j-1}"""
    return [x[2 * j - 1] for j in range(1, k + 1)]


@lru_cache(maxsize=None)
def gen_Q_t(N: int, route: str = "casoratian") -> TauSequence:
    """Q_{-1} .. Q_N in z and odd times, from the even-fixed x-sequence."""
    if route not in ROUTES:
        raise ValueError(f"Unknown route {route!r}, expected one of {ROUTES}")
    _, x = even_gauge(max(N - 1, 0))
    entries = [ZPOLY_ONE, ZPOLY_ONE]
    for n in range(1, N + 1):
        if route == "casoratian":
            entries.append(casoratian(odd_x(x, n)))
        else:
            entries.append(x_matrix_det(x, n))
        logger.info(f"Q_{n} in t-coordinates ({route}): degree {entries[-1].degree}")
    return TauSequence(SequenceKind.DIFFERENCE_Q, Family.T, tuple(entries))


def raw_q_from_t_independence(N: int) -> Set[VarId]:
    """Even times that survive in the raw-gauge Casoratians Q_1..Q_N; empty when Q_n ignores them."""
    x = gen_x(max(2 * N - 1, 1))
    survivors: Set[VarId] = set()
    for n in range(1, N + 1):
        q = casoratian(odd_x(x, n))
        survivors.update(v for v in q.variables() if v.family == Family.T and v.index % 2 == 0)
    if survivors:
        logger.warning(f"Even times survive in raw-gauge Casoratians: {sorted(survivors)}")
    return survivors


def casoratian_reduction_check(k: int, x: XSequence = None) -> ZPoly:
    """Residual of C(y_1..y_k, 1) = (-1)^k C(y_1..y_{k-1})."""
    if x is None:
        x = gen_x(max(2 * k - 1, 1))
    ys = odd_x(x, k)
    lhs = casoratian(ys + [ZPOLY_ONE])
    rhs = casoratian(ys[:-1])
    return lhs - rhs if k % 2 == 0 else lhs + rhs


def jacobi_residual(phis: Sequence[ZPoly], chi: ZPoly, k: int) -> ZPoly:
    """
    Residual of [C_k(chi), C_{k+1}] + (T C_k) C_{k+1}(chi), where
    C_k = C(phi_1..phi_k) and C_k(chi) = C(phi_1..phi_k, chi).
    """
    if len(phis) < k + 1:
        raise ValueError(f"jacobi_residual needs {k + 1} functions, got {len(phis)}")
    head = list(phis[:k])
    c_k = casoratian(head)
    c_k1 = casoratian(list(phis[:k + 1]))
    c_k_chi = casoratian(head + [chi])
    c_k1_chi = casoratian(list(phis[:k + 1]) + [chi])
    return bracket(c_k_chi, c_k1) + c_k.shift(1) * c_k1_chi
