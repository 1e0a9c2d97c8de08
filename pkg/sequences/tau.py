"""Sequence containers shared by the generators and verifiers."""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Tuple

from core.rings import Family, ZPoly


class SequenceKind(str, Enum):
    CLASSICAL_P = "classical-P"
    DIFFERENCE_Q = "difference-Q"
    DODGSON_R = "dodgson-R"
    ZERO_DATA_Q0 = "zero-data-Q0"


class Gauge(str, Enum):
    RAW = "raw"
    EVEN_FIXED = "even-fixed"


@lru_cache(maxsize=None)
def double_factorial(k: int) -> int:
    return 1 if k <= 1 else k * double_factorial(k - 2)


@lru_cache(maxsize=None)
def normalizer(n: int) -> int:
    """A_n = prod_{j=1}^{n} (2j-1)!!"""
    result = 1
    for j in range(1, n + 1):
        result *= double_factorial(2 * j - 1)
    return result


def triangular(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class XSequence:
    """x_0 .. x_K with x_0 = 1 and Delta x_k = x_{k-1}"""
    entries: Tuple[ZPoly, ...]
    gauge: Gauge = Gauge.RAW

    def __getitem__(self, k: int) -> ZPoly:
        if k < 0:
            return ZPoly.zero()
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def K(self) -> int:
        return len(self.entries) - 1

    def delta_violations(self) -> List[int]:
        return [k for k in range(1, len(self.entries)) if self.entries[k].delta() != self.entries[k - 1]]


@dataclass(frozen=True)
class TauSequence:
    """
    Entries indexed from -1: ``seq[-1]``, ``seq[0]``, ..., ``seq[N]``.

    Python's negative indexing is not used; ``seq[n]`` is always entry n.
    """
    kind: SequenceKind
    coords: Family
    entries: Tuple[ZPoly, ...]
    normalizers: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ValueError("A tau sequence needs at least the entries -1 and 0")
        if not self.normalizers:
            object.__setattr__(self, "normalizers", tuple(normalizer(n) for n in range(self.N + 1)))

    def __getitem__(self, n: int) -> ZPoly:
        if n < -1 or n > self.N:
            raise IndexError(f"Entry {n} outside -1..{self.N}")
        return self.entries[n + 1]

    def __iter__(self) -> Iterator[ZPoly]:
        return iter(self.entries)

    @property
    def N(self) -> int:
        return len(self.entries) - 2

    def indices(self) -> range:
        return range(-1, self.N + 1)

    def degree_violations(self) -> List[int]:
        return [n for n in range(1, self.N + 1) if self[n].degree != triangular(n)]

    def with_entries(self, entries, kind=None, coords=None) -> "TauSequence":
        return TauSequence(kind or self.kind, coords if coords is not None else self.coords, tuple(entries))
