"""
Dodgson condensation.

Layer l of the pyramid holds the contiguous (l+1)x(l+1) minors of A:

    L_{l+1}[i][j] = (L_l[i][j] L_l[i+1][j+1] - L_l[i][j+1] L_l[i+1][j]) / L_{l-1}[i+1][j+1]

with L_{-1} all ones. A zero divisor is bypassed by computing that minor
directly with Bareiss elimination.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from core import determinant
from lattice.matrix_io import Matrix, as_matrix

logger = logging.getLogger(__name__)

Site3D = Tuple[int, int, int]


def bareiss_det(A: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination with row-swap pivoting."""
    A = as_matrix(A)
    return determinant.bareiss_det(A, Fraction(0), Fraction(1))


@dataclass
class Pyramid:
    """layers[l] is (N-l)x(N-l); layers[N-1][0][0] = det A"""
    layers: List[Matrix]
    fallbacks: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def N(self) -> int:
        return len(self.layers[0])

    @property
    def top(self) -> Fraction:
        return self.layers[-1][0][0]

    def to_grid3d(self) -> Dict[Site3D, Fraction]:
        """(l, m, n) -> value with m = l - N + 1 + 2i, n = l - N + 1 + 2j."""
        N = self.N
        grid: Dict[Site3D, Fraction] = {}
        for l, layer in enumerate(self.layers):
            for i, row in enumerate(layer):
                for j, value in enumerate(row):
                    grid[(l, l - N + 1 + 2 * i, l - N + 1 + 2 * j)] = value
        return grid


def dodgson_condense(A: Matrix) -> Tuple[Fraction, Pyramid]:
    A = as_matrix(A)
    N = len(A)
    layers: List[Matrix] = [A]
    below: Matrix = [[Fraction(1)] * (N + 1) for _ in range(N + 1)]
    fallbacks: List[Tuple[int, int, int]] = []
    for l in range(0, N - 1):
        cur = layers[l]
        size = N - l - 1
        nxt: Matrix = []
        for i in range(size):
            row = []
            for j in range(size):
                divisor = below[i + 1][j + 1]
                if divisor == 0:
                    minor = [r[j:j + l + 2] for r in A[i:i + l + 2]]
                    row.append(bareiss_det(minor))
                    fallbacks.append((l + 1, i, j))
                    continue
                row.append((cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]) / divisor)
            nxt.append(row)
        layers.append(nxt)
        below = cur
        logger.debug(f"Condensation layer {l + 1}: {size}x{size}")
    if fallbacks:
        logger.warning(f"Condensation used Bareiss for {len(fallbacks)} entries with a zero divisor")
    pyramid = Pyramid(layers, fallbacks)
    return pyramid.top, pyramid
