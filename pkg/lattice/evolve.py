"""
Cauchy evolution of the knight recurrence

    alpha Q_{m+1,n+1} Q_{m,n-1} + beta Q_{m,n+1} Q_{m+1,n-1} = Q_{m,n} Q_{m+1,n}

from Q_{m,-1} = Q_{m,0} = 1 and Q_{0,n} = q_n. The discrete KdV equation is
alpha = 1, beta = -1.

Rows are filled outward from the seed rows; within a row, columns outward
from m = 0. Every step solves for the single unknown corner of one domino.
When the coefficient on that corner is zero, the neighbouring domino that
holds the same corner with the other coefficient is used instead; it reaches
one column further out, so the run is made on a padded window and cropped.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, NamedTuple, Optional, Tuple

from core.rings import LaurentPoly, NotDivisible, lau_exact_div, s
from lattice.grid import Cell, Grid2D, LatticeSingularity, Site, Window

logger = logging.getLogger(__name__)

LIFT = s(1)


class _NumericZeroDivisor(Exception):
    def __init__(self, site: Site):
        super().__init__(f"zero divisor at {site}")
        self.site = site


class Formula(NamedTuple):
    """target = (P1 - k * P2) / (c * D), with c the coefficient named ``divisor_coef`` and k the other one."""
    product: Tuple[Site, Site]
    subtracted: Tuple[Site, Site]
    divisor: Site
    divisor_coef: str


def _plan(window: Window):
    """Yield (target, primary formula, alternate formula) in evaluation order."""
    m0, m1 = window.m_range
    n0, n1 = window.n_range
    for n in range(1, n1 + 1):
        for m in range(0, m1):
            yield (m + 1, n), \
                Formula(((m, n - 1), (m + 1, n - 1)), ((m, n), (m + 1, n - 2)), (m, n - 2), "alpha"), \
                Formula(((m + 1, n - 1), (m + 2, n - 1)), ((m + 2, n), (m + 1, n - 2)), (m + 2, n - 2), "beta")
        for m in range(-1, m0 - 1, -1):
            yield (m, n), \
                Formula(((m, n - 1), (m + 1, n - 1)), ((m + 1, n), (m, n - 2)), (m + 1, n - 2), "beta"), \
                Formula(((m - 1, n - 1), (m, n - 1)), ((m - 1, n), (m, n - 2)), (m - 1, n - 2), "alpha")
    for n in range(-2, n0 - 1, -1):
        for m in range(0, m1):
            yield (m + 1, n), \
                Formula(((m, n + 1), (m + 1, n + 1)), ((m + 1, n + 2), (m, n)), (m, n + 2), "beta"), \
                Formula(((m + 1, n + 1), (m + 2, n + 1)), ((m + 1, n + 2), (m + 2, n)), (m + 2, n + 2), "alpha")
        for m in range(-1, m0 - 1, -1):
            yield (m, n), \
                Formula(((m, n + 1), (m + 1, n + 1)), ((m, n + 2), (m + 1, n)), (m + 1, n + 2), "alpha"), \
                Formula(((m - 1, n + 1), (m, n + 1)), ((m, n + 2), (m - 1, n)), (m - 1, n + 2), "beta")


def _initial(window: Window, seed: Dict[int, Cell], one: Cell) -> Dict[Site, Optional[Cell]]:
    values: Dict[Site, Optional[Cell]] = {}
    for m in window.ms():
        values[(m, -1)] = one
        values[(m, 0)] = one
    for n in window.ns():
        if n in (-1, 0):
            continue
        if n not in seed:
            raise LatticeSingularity(f"No seed value for n = {n}", (0, n))
        values[(0, n)] = seed[n]
    return values


def _run(
    window: Window,
    seed: Dict[int, Cell],
    alpha: Fraction,
    beta: Fraction,
    one: Cell,
    divide: Callable[[Cell, Cell, Site], Optional[Cell]],
) -> Grid2D:
    values = _initial(window, seed, one)
    grid = Grid2D(window, values, dict(seed))
    coefs = {"alpha": alpha, "beta": beta}
    for target, primary, alternate in _plan(window):
        formula = primary if coefs[primary.divisor_coef] else alternate
        divisor_coef = coefs[formula.divisor_coef]
        other_coef = beta if formula.divisor_coef == "alpha" else alpha
        (a, b), (e, f), d = formula.product, formula.subtracted, formula.divisor
        deps = [values.get(a), values.get(b), values.get(d)]
        if other_coef:
            deps += [values.get(e), values.get(f)]
        if any(v is None for v in deps):
            values[target] = None
            continue
        numerator = values[a] * values[b]
        if other_coef:
            numerator = numerator - values[e] * values[f] * other_coef
        values[target] = divide(numerator, values[d] * divisor_coef, target)
    return grid


def _numeric_divide(num: Fraction, den: Fraction, site: Site) -> Fraction:
    if den == 0:
        raise _NumericZeroDivisor(site)
    return Fraction(num) / den


def _symbolic_divider(grid_findings: list, strict: bool):
    def divide(num: LaurentPoly, den: LaurentPoly, site: Site) -> Optional[LaurentPoly]:
        if not den:
            raise LatticeSingularity("Divisor vanishes identically", site)
        try:
            return lau_exact_div(num, den)
        except NotDivisible as e:
            if strict:
                raise LatticeSingularity(f"Lifted division is not exact: {e}", site) from e
            logger.warning(f"Division is not exact at {site}; the cell is left undetermined")
            grid_findings.append(f"NotDivisible at (m, n) = {site}: {e}")
            return None
    return divide


def _as_laurent_seed(seed: Dict[int, Cell]) -> Dict[int, LaurentPoly]:
    return {n: v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v) for n, v in seed.items()}


def _lifted_seed(seed: Dict[int, Cell]) -> Dict[int, LaurentPoly]:
    """q_n -> v_n * s for the data rows; the two seed rows stay 1."""
    out = {}
    for n, v in seed.items():
        if n in (-1, 0):
            out[n] = LaurentPoly.constant(v)
        else:
            out[n] = LaurentPoly.var(LIFT).scale(v)
    return out


def _padded(window: Window) -> Window:
    pad = max(window.n_range[1], -window.n_range[0]) + 1
    return Window((window.m_range[0] - pad, window.m_range[1] + pad), window.n_range)


def _cropped(grid: Grid2D, window: Window) -> Grid2D:
    values = {(m, n): grid.values.get((m, n)) for n in window.ns() for m in window.ms()}
    return Grid2D(window, values, grid.seed, grid.findings)


def _evolve(alpha: Fraction, beta: Fraction, seed: Dict[int, Cell], window: Window) -> Grid2D:
    symbolic = any(isinstance(v, LaurentPoly) and not v.is_constant() for v in seed.values())
    if symbolic:
        findings: list = []
        grid = _run(window, _as_laurent_seed(seed), alpha, beta, LaurentPoly.constant(1),
                    _symbolic_divider(findings, strict=False))
        grid.findings.extend(findings)
        grid.seed = dict(seed)
        return grid

    numeric_seed = {n: (v.constant_value() if isinstance(v, LaurentPoly) else Fraction(v)) for n, v in seed.items()}
    try:
        return _run(window, numeric_seed, alpha, beta, Fraction(1), _numeric_divide)
    except _NumericZeroDivisor as e:
        logger.warning(f"Zero divisor at {e.site}; re-running with the seed lifted to Q[s, 1/s]")
    lifted = _run(window, _lifted_seed(numeric_seed), alpha, beta, LaurentPoly.constant(1),
                  _symbolic_divider([], strict=True))
    grid = lifted.specialize({LIFT: Fraction(1)})
    grid.seed = numeric_seed
    return grid


def knight_evolve(
    alpha,
    beta,
    seed: Dict[int, Cell],
    window: Window,
) -> Grid2D:
    """
    Fill ``window`` from ``seed`` (values at (0, n)).

    Numeric seeds run in exact rationals; if a divisor vanishes, the run is
    repeated with q_n -> v_n * s over Q[s, 1/s] and specialized at s = 1.
    Symbolic seeds run over the Laurent ring; an inexact division leaves the
    cell as None and is recorded in ``findings``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha and not beta:
        raise LatticeSingularity("Recurrence with alpha = beta = 0 determines no site", (0, 0))
    if alpha and beta:
        return _evolve(alpha, beta, seed, window)
    logger.info(f"Degenerate knight recurrence (alpha = {alpha}, beta = {beta}); evolving on a padded window")
    grid = _cropped(_evolve(alpha, beta, seed, _padded(window)), window)
    missing = [site for site, v in grid.values.items() if v is None]
    if missing and not grid.findings:
        raise LatticeSingularity(f"{len(missing)} sites left undetermined", missing[0])
    return grid


def dkdv_evolve(seed: Dict[int, Cell], window: Window) -> Grid2D:
    """Discrete KdV: the knight recurrence with alpha = 1, beta = -1."""
    return knight_evolve(1, -1, seed, window)


def recurrence_residuals(grid: Grid2D, alpha=1, beta=-1) -> Dict[Site, Cell]:
    """alpha Q_{m+1,n+1}Q_{m,n-1} + beta Q_{m,n+1}Q_{m+1,n-1} - Q_{m,n}Q_{m+1,n} over every complete domino."""
    residuals: Dict[Site, Cell] = {}
    v = grid.values
    for (m, n) in sorted(v):
        sites = [(m + 1, n + 1), (m, n - 1), (m, n + 1), (m + 1, n - 1), (m, n), (m + 1, n)]
        if not all(site in v and v[site] is not None for site in sites):
            continue
        residuals[(m, n)] = (
            v[(m + 1, n + 1)] * v[(m, n - 1)] * Fraction(alpha)
            + v[(m, n + 1)] * v[(m + 1, n - 1)] * Fraction(beta)
            - v[(m, n)] * v[(m + 1, n)]
        )
    return residuals


def somos_a1(N: int, p_minus1: Cell = 1, p_0: Cell = 1) -> Dict[int, Cell]:
    """
    p_{-1} .. p_N of p_{n+1} p_{n-1} = p_n^2 + 1.

    Every p_n is an integer Laurent polynomial in (p_{-1}, p_0); the all-ones
    start gives 1, 1, 2, 5, 13, 34, 89, ...
    """
    if N < 0:
        raise ValueError(f"somos_a1 needs N >= 0, got {N}")
    symbolic = isinstance(p_minus1, LaurentPoly) or isinstance(p_0, LaurentPoly)
    values: Dict[int, LaurentPoly] = _as_laurent_seed({-1: p_minus1, 0: p_0})
    for n in range(0, N):
        prev = values[n - 1]
        if not prev:
            raise LatticeSingularity(f"p_{n - 1} vanishes", (n - 1, 0))
        try:
            values[n + 1] = lau_exact_div(values[n] * values[n] + 1, prev)
        except NotDivisible as e:
            raise LatticeSingularity(f"p_{n + 1} is not a Laurent polynomial: {e}", (n + 1, 0)) from e
    if symbolic:
        return dict(values)
    return {n: v.constant_value() for n, v in values.items()}
