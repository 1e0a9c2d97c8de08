"""
The x-sequence: coefficients of the generating function

    F(z, t, u) = exp( sum_k (-1)^(k+1) (z + t_k) u^k / k )

and the coordinate changes built from it.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from core.determinant import det_expand
from core.rings import (
    LAURENT_ONE,
    LAURENT_ZERO,
    LaurentPoly,
    ZPOLY_ONE,
    ZPOLY_ZERO,
    VarId,
    ZPoly,
    t,
)
from sequences.tau import Gauge, XSequence

logger = logging.getLogger(__name__)


def _signed_z(k: int) -> ZPoly:
    """z_k = (-1)^(k+1) (z + t_k)"""
    base = ZPoly([LaurentPoly.var(t(k)), 1])
    return base if k % 2 else -base


@lru_cache(maxsize=None)
def gen_x(K: int) -> XSequence:
    """
    x_0 .. x_K in raw gauge by exact power-series exponentiation.

    With F = exp(A), u*F' = (u*A') F gives n x_n = sum_{k=1}^{n} k a_k x_{n-k},
    and k a_k = z_k.
    """
    if K < 1:
        raise ValueError(f"gen_x needs K >= 1, got {K}")
    zs = [ZPOLY_ZERO] + [_signed_z(k) for k in range(1, K + 1)]
    xs: List[ZPoly] = [ZPOLY_ONE]
    for n in range(1, K + 1):
        acc = ZPOLY_ZERO
        for k in range(1, n + 1):
            acc = acc + zs[k] * xs[n - k]
        xs.append(acc.scale(Fraction(1, n)))
    logger.debug(f"Generated x_0..x_{K}")
    return XSequence(tuple(xs), Gauge.RAW)


def x_det(k: int) -> ZPoly:
    """x_k as the almost-triangular determinant in z_1..z_k, divided by k!"""
    if k < 1:
        raise ValueError(f"x_det needs k >= 1, got {k}")
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if j <= i:
                row.append(_signed_z(i - j + 1))
            elif j == i + 1:
                row.append(ZPoly.constant(-i))
            else:
                row.append(ZPOLY_ZERO)
        rows.append(row)
    factorial = 1
    for i in range(2, k + 1):
        factorial *= i
    return det_expand(rows, ZPOLY_ZERO, ZPOLY_ONE).scale(Fraction(1, factorial))


def t_from_x(xvals: Sequence[LaurentPoly]) -> List[LaurentPoly]:
    """
    t_1 .. t_K from x_1 .. x_K (values at z = 0) by the Newton-type determinant:
    first column i*x_i, then x_{i-j+1} below the superdiagonal of ones.
    """
    x = [LAURENT_ONE] + list(xvals)
    result = []
    for k in range(1, len(x)):
        rows = []
        for i in range(1, k + 1):
            row = [x[i].scale(i)]
            for j in range(2, k + 1):
                idx = i - j + 1
                row.append(x[idx] if idx >= 0 else LAURENT_ZERO)
            rows.append(row)
        result.append(det_expand(rows, LAURENT_ZERO, LAURENT_ONE))
    return result


@lru_cache(maxsize=None)
def even_gauge(K: int) -> Tuple[Dict[int, LaurentPoly], XSequence]:
    """
    Fix t_2, .., t_{2K} by x_{2p}(0) = 0.

    Returns the map 2p -> t_{2p} in odd times and x_0 .. x_{2K+1} with every
    even time substituted, so only odd times remain.
    """
    raw = gen_x(2 * K + 1)
    even: Dict[int, LaurentPoly] = {}
    for p in range(1, K + 1):
        tv = t(2 * p)
        value = raw[2 * p].evaluate(0).substitute({t(2 * j): even[2 * j] for j in range(1, p)})
        coef = value.coefficient_of(tv, 1)
        if not coef.is_constant() or not coef:
            raise ArithmeticError(f"Coefficient of {tv} in x_{2 * p}(0) is {coef}, expected a nonzero constant")
        rest = value - coef * LaurentPoly.var(tv)
        if rest.degree_in(tv) != 0:
            raise ArithmeticError(f"x_{2 * p}(0) is not linear in {tv}")
        even[2 * p] = rest.scale(-1 / coef.constant_value())
        logger.debug(f"{tv} = {even[2 * p]}")
    mapping: Dict[VarId, LaurentPoly] = {t(k): v for k, v in even.items()}
    entries = tuple(x.substitute(mapping) if mapping else x for x in raw.entries)
    return even, XSequence(entries, Gauge.EVEN_FIXED)
