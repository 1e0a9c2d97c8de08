"""Grid2D state, seeds and grid serialization."""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from core.errors import BchlabError
from core.rings import LaurentPoly, VarId, q

logger = logging.getLogger(__name__)

Cell = Union[Fraction, LaurentPoly]
Site = Tuple[int, int]

FIGURE4_M = (-6, 6)
FIGURE4_N = (-7, 6)


class LatticeSingularity(BchlabError):
    """Custom exception for a lattice site the recurrence cannot determine"""

    def __init__(self, message: str, site: Optional[Site] = None):
        super().__init__(message if site is None else f"{message} at (m, n) = {site}")
        self.site = site


class SeedFormatError(BchlabError):
    """Custom exception for malformed seed files or seed/window mismatches"""
    pass


@dataclass(frozen=True)
class Window:
    m_range: Tuple[int, int]
    n_range: Tuple[int, int]

    def __post_init__(self):
        m0, m1 = self.m_range
        n0, n1 = self.n_range
        if not (m0 <= 0 <= m1):
            raise ValueError(f"Window must contain m = 0, got m in [{m0}, {m1}]")
        if not (n0 <= -1 and n1 >= 0):
            raise ValueError(f"Window must contain the seed rows n = -1, 0, got n in [{n0}, {n1}]")

    @classmethod
    def figure4(cls) -> "Window":
        return cls(FIGURE4_M, FIGURE4_N)

    @classmethod
    def parse(cls, text: str) -> "Window":
        """``figure4`` or ``MxN`` for m in [-M, M], n in [-1, N]."""
        text = text.strip().lower()
        if text == "figure4":
            return cls.figure4()
        try:
            m_text, n_text = text.split("x")
            M, N = int(m_text), int(n_text)
        except ValueError:
            raise ValueError(f"Window must be 'figure4' or 'MxN', got {text!r}")
        if M < 0 or N < 0:
            raise ValueError(f"Window sizes must be non-negative, got {text!r}")
        return cls((-M, M), (-1, N))

    def ms(self) -> range:
        return range(self.m_range[0], self.m_range[1] + 1)

    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def seed_rows(self) -> List[int]:
        return [n for n in self.ns() if n not in (-1, 0)]


@dataclass
class Grid2D:
    """Values Q_{m,n} on a window; a cell is None when its exact division failed."""
    window: Window
    values: Dict[Site, Optional[Cell]] = field(default_factory=dict)
    seed: Dict[int, Cell] = field(default_factory=dict)
    findings: List[str] = field(default_factory=list)

    def __getitem__(self, site: Site) -> Optional[Cell]:
        return self.values[site]

    def __contains__(self, site: Site) -> bool:
        return site in self.values

    def is_symbolic(self) -> bool:
        return any(isinstance(v, LaurentPoly) for v in self.values.values())

    def specialize(self, values: Mapping[VarId, Fraction]) -> "Grid2D":
        """Evaluate every symbolic cell at rational values."""
        out = {}
        for site, cell in self.values.items():
            if isinstance(cell, LaurentPoly):
                out[site] = cell.evaluate(values).constant_value()
            else:
                out[site] = cell
        seed = {n: (v.evaluate(values).constant_value() if isinstance(v, LaurentPoly) else v) for n, v in self.seed.items()}
        return Grid2D(self.window, out, seed, list(self.findings))

    def rows(self) -> List[Tuple[int, List[Optional[Cell]]]]:
        """Rows from the top (largest n) down, each from the smallest m."""
        return [(n, [self.values.get((m, n)) for m in self.window.ms()]) for n in reversed(self.window.ns())]

    def laurent_violations(self) -> List[Site]:
        """Sites whose value is missing or outside Z[q^{+-}] (integers for numeric cells)."""
        bad = []
        for site, cell in sorted(self.values.items()):
            if cell is None:
                bad.append(site)
            elif isinstance(cell, LaurentPoly):
                if not cell.is_integral(cell.variables()):
                    bad.append(site)
            elif Fraction(cell).denominator != 1:
                bad.append(site)
        return bad


def ones_seed(window: Window) -> Dict[int, Cell]:
    return {n: Fraction(1) for n in window.ns()}


def symbolic_seed(window: Window) -> Dict[int, Cell]:
    """q_n at (0, n); symbolic data exist only for n >= 1."""
    if window.n_range[0] < -1:
        raise SeedFormatError(f"Symbolic seeds cover n >= -1 only, window starts at n = {window.n_range[0]}")
    seed: Dict[int, Cell] = {-1: LaurentPoly.constant(1), 0: LaurentPoly.constant(1)}
    for n in range(1, window.n_range[1] + 1):
        seed[n] = LaurentPoly.var(q(n))
    return seed


def load_seed_file(path: Union[str, Path], window: Window) -> Dict[int, Cell]:
    """Read ``n<TAB>value`` lines; '#' starts a comment."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise SeedFormatError(f"Cannot read seed file {path}: {e}") from e
    seed: Dict[int, Cell] = {-1: Fraction(1), 0: Fraction(1)}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise SeedFormatError(f"{path}:{lineno}: expected 'n<TAB>value', got {raw!r}")
        try:
            n, value = int(parts[0]), Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as e:
            raise SeedFormatError(f"{path}:{lineno}: {e}") from e
        if n in (-1, 0) and value != 1:
            raise SeedFormatError(f"{path}:{lineno}: seed rows n = -1, 0 are fixed to 1")
        seed[n] = value
    missing = [n for n in window.ns() if n not in seed]
    if missing:
        raise SeedFormatError(f"{path}: no seed value for n in {missing}")
    logger.info(f"Loaded {len(seed)} seed values from {path}")
    return seed


def _cell_text(cell: Optional[Cell]) -> str:
    return "?" if cell is None else str(cell)


def grid_to_tsv(grid: Grid2D) -> str:
    """Plain values, one row per n from the top, tab-separated, m increasing to the right."""
    return "".join("\t".join(_cell_text(c) for c in row) + "\n" for _, row in grid.rows())


def grid_to_json(grid: Grid2D) -> str:
    records = [
        {"m": m, "n": n, "value": _cell_text(grid.values.get((m, n)))}
        for n in reversed(grid.window.ns())
        for m in grid.window.ms()
    ]
    return json.dumps(records, indent=2)


def parse_tsv(text: str) -> List[List[str]]:
    return [line.split("\t") for line in text.splitlines() if line.strip()]
