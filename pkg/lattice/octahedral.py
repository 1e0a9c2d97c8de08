"""Residual checks for the octahedral recurrence and its l-periodic reduction."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from core.rings import LaurentPoly
from lattice.condense import Pyramid
from sequences.tau import TauSequence

logger = logging.getLogger(__name__)

Value = Union[Fraction, LaurentPoly]


@dataclass
class OctahedralReport:
    residuals: Dict[tuple, Value] = field(default_factory=dict)

    @property
    def failures(self) -> List[tuple]:
        return sorted(site for site, r in self.residuals.items() if r)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_3d(grid: Mapping[Tuple[int, int, int], Value], floor_layer: int) -> OctahedralReport:
    """
    u_{l,m+1,n+1} u_{l,m-1,n-1} - u_{l,m+1,n-1} u_{l,m-1,n+1} = u_{l-1,m,n} u_{l+1,m,n}

    Layer ``floor_layer - 1`` is all ones; other missing points are outside
    the window and their instances are skipped.
    """
    report = OctahedralReport()

    def get(l, m, n):
        if l == floor_layer - 1:
            return Fraction(1)
        return grid.get((l, m, n))

    for (top, m, n) in sorted(grid):
        l = top - 1
        if l < floor_layer:
            continue
        lower = get(l - 1, m, n)
        upper = grid[(top, m, n)]
        if lower is None:
            continue
        corners = [get(l, m + 1, n + 1), get(l, m - 1, n - 1), get(l, m + 1, n - 1), get(l, m - 1, n + 1)]
        if any(v is None for v in corners):
            continue
        a, b, c, d = corners
        report.residuals[(l, m, n)] = a * b - c * d - lower * upper
    return report


def _check_2d(plane: Mapping[Tuple[int, int], Value]) -> OctahedralReport:
    """u_{m+1,n+1} u_{m-1,n-1} - u_{m+1,n-1} u_{m-1,n+1} = u_{m,n}^2 on sites with m = n (mod 2)."""
    report = OctahedralReport()
    for (m, n) in sorted(plane):
        if (m - n) % 2:
            continue
        corners = [plane.get((m + 1, n + 1)), plane.get((m - 1, n - 1)),
                   plane.get((m + 1, n - 1)), plane.get((m - 1, n + 1))]
        if any(v is None for v in corners):
            continue
        a, b, c, d = corners
        centre = plane[(m, n)]
        report.residuals[(m, n)] = a * b - c * d - centre * centre
    return report


def octahedral_verify(data, periodic: bool = False) -> OctahedralReport:
    """
    Re-check every octahedral instance inside ``data``.

    ``data`` is a Pyramid, a 3D map (l, m, n) -> value, or with ``periodic``
    set, a 2D map (m, n) -> value for the reduction u_{l+1} = u_{l-1}.
    """
    if periodic:
        report = _check_2d(data)
    else:
        if isinstance(data, Pyramid):
            grid = data.to_grid3d()
        else:
            grid = data
        floor_layer = min(l for l, _, _ in grid)
        report = _check_3d(grid, floor_layer)
    if report.ok:
        logger.info(f"Octahedral check: {len(report.residuals)} instances, all residuals vanish")
    else:
        logger.warning(f"Octahedral check: nonzero residuals at {report.failures}")
    return report


def dodgson_plane(seq: TauSequence, ms: Iterable[int]) -> Dict[Tuple[int, int], Value]:
    """u_{m,n} = R_n(m) for n = -1..N and the given integer m."""
    plane: Dict[Tuple[int, int], Value] = {}
    for n in seq.indices():
        for m in ms:
            value = seq[n].evaluate(m)
            plane[(m, n)] = value.constant_value() if value.is_constant() else value
    return plane
