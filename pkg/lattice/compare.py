"""Lattice values against the polynomial sequence evaluated at z = m."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.rings import LaurentPoly, lau_exact_div
from lattice.evolve import dkdv_evolve
from lattice.grid import Grid2D, LatticeSingularity, Window, symbolic_seed
from sequences.conversion import gen_Q_q

logger = logging.getLogger(__name__)


@dataclass
class ComparisonReport:
    checked: List[Tuple[int, int]] = field(default_factory=list)
    mismatches: Dict[Tuple[int, int], Tuple[object, object]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def lattice_vs_polynomial(N: int, m_range: Tuple[int, int]) -> ComparisonReport:
    """Q_n(m) from the q-coordinate sequence against the symbolic lattice cell (m, n)."""
    window = Window(m_range, (-1, N))
    grid = dkdv_evolve(symbolic_seed(window), window)
    seq = gen_Q_q(N)
    report = ComparisonReport()
    for n in range(1, N + 1):
        for m in window.ms():
            expected = seq[n].evaluate(m)
            actual = grid[(m, n)]
            report.checked.append((m, n))
            if actual is None or actual != expected:
                report.mismatches[(m, n)] = (expected, actual)
    if report.ok:
        logger.info(f"Lattice matches Q_n(m) on {len(report.checked)} sites")
    else:
        logger.warning(f"Lattice differs from Q_n(m) at {sorted(report.mismatches)}")
    return report


def _finite_difference_degree(values: Sequence[LaurentPoly]) -> Optional[int]:
    """Degree of the interpolating polynomial of values at consecutive integers, None if not reached."""
    diffs = list(values)
    for degree in range(len(values)):
        if all(not d for d in diffs):
            return degree - 1
        if len(diffs) == 1:
            return None
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return None


def row_degree_in_m(grid: Grid2D, n: int, m_start: int = 0) -> Optional[int]:
    """
    Degree in m of row n read from ``m_start`` rightwards.

    Needs more than degree + 1 points; returns None when the row is too short.
    """
    ms = [m for m in grid.window.ms() if m >= m_start]
    values = []
    for m in ms:
        cell = grid[(m, n)]
        if cell is None:
            return None
        values.append(cell if isinstance(cell, LaurentPoly) else LaurentPoly.constant(cell))
    return _finite_difference_degree(values)


def next_column(grid: Grid2D, m: int) -> Dict[int, LaurentPoly]:
    """
    Column m + 1 of a discrete KdV grid from column m by the linear recurrence

        F_{n-1} G_{n+1} = F_{n+1} G_{n-1} + F_n G_n,   G_{-1} = G_0 = 1,

    with F_n = Q_{m,n}; for m = 0 under the ones seed F is all ones and G is
    the Fibonacci column, for m = 1 G is the column m = 2.
    """
    column = {n: grid[(m, n)] for n in grid.window.ns() if n >= -1}
    if any(v is None for v in column.values()):
        raise LatticeSingularity(f"Column m = {m} has undetermined cells", (m, -1))
    G: Dict[int, LaurentPoly] = {-1: LaurentPoly.constant(1), 0: LaurentPoly.constant(1)}
    for n in range(0, grid.window.n_range[1]):
        F_prev, F_cur, F_next = (LaurentPoly.constant(v) if not isinstance(v, LaurentPoly) else v
                                 for v in (column[n - 1], column[n], column[n + 1]))
        if not F_prev:
            raise LatticeSingularity(f"F_{n - 1} vanishes on column {m}", (m, n - 1))
        G[n + 1] = lau_exact_div(F_next * G[n - 1] + F_cur * G[n], F_prev)
    logger.debug(f"Column {m + 1} from column {m}: {len(G)} entries")
    return G
