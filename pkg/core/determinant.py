"""Exact determinants over any commutative ring whose elements support +, -, * and truthiness."""
import logging
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

R = TypeVar("R")


def det_expand(rows: Sequence[Sequence[R]], zero: R, one: R) -> R:
    """
    Division-free determinant by expansion over row subsets.

    Columns are filled left to right; ``partial[mask]`` holds the signed sum
    over all assignments of the first popcount(mask) columns to the rows in
    ``mask``. Zero entries are skipped, so banded matrices stay cheap.
    """
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ValueError(f"det_expand needs a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")

    partial: Dict[int, R] = {0: one}
    for col in range(n):
        nxt: Dict[int, R] = {}
        for mask, acc in partial.items():
            unused_before = 0
            for r in range(n):
                bit = 1 << r
                if mask & bit:
                    continue
                entry = rows[r][col]
                if entry:
                    term = acc * entry
                    if unused_before & 1:
                        term = -term
                    key = mask | bit
                    nxt[key] = nxt[key] + term if key in nxt else term
                unused_before += 1
        partial = {m: v for m, v in nxt.items() if v}
        if not partial:
            return zero
    return partial.get((1 << n) - 1, zero)


def bareiss_det(
    rows: Sequence[Sequence[R]],
    zero: R,
    one: R,
    exquo: Optional[Callable[[R, R], R]] = None,
) -> R:
    """
    Fraction-free Gaussian elimination; every division is exact.

    ``exquo`` defaults to ``/`` which is exact for Fraction entries.
    """
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ValueError("bareiss_det needs a square matrix")
    if exquo is None:
        exquo = lambda a, b: a / b  # noqa: E731

    M: List[List[R]] = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[i], M[k] = M[k], M[i]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exquo(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det
