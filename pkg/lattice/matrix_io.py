import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Union

from core.errors import BchlabError

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


class MatrixFormatError(BchlabError):
    """Custom exception for malformed matrix input"""
    pass


def as_matrix(rows: Sequence[Sequence[Union[int, str, Fraction]]]) -> Matrix:
    """Validate a square matrix and convert its entries to Fraction"""
    n = len(rows)
    if n < 1:
        raise MatrixFormatError("Matrix must have at least one row")
    matrix: Matrix = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MatrixFormatError(f"Row {i + 1} has {len(row)} entries, expected {n}")
        try:
            matrix.append([Fraction(v) for v in row])
        except (ValueError, ZeroDivisionError, TypeError) as e:
            raise MatrixFormatError(f"Row {i + 1}: {e}") from e
    return matrix


def parse_matrix(text: str) -> Matrix:
    """First line N, then N rows of N integers or p/q rationals."""
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise MatrixFormatError("Empty matrix input")
    try:
        n = int(lines[0])
    except ValueError:
        raise MatrixFormatError(f"First line must be the size N, got {lines[0]!r}")
    if len(lines) - 1 != n:
        raise MatrixFormatError(f"Expected {n} rows, got {len(lines) - 1}")
    return as_matrix([line.split() for line in lines[1:]])


def load_matrix(path: Union[str, Path]) -> Matrix:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise MatrixFormatError(f"Cannot read matrix file {path}: {e}") from e
    matrix = parse_matrix(text)
    logger.info(f"Loaded {len(matrix)}x{len(matrix)} matrix from {path}")
    return matrix


def format_matrix(matrix: Matrix) -> str:
    return f"{len(matrix)}\n" + "".join(" ".join(str(v) for v in row) + "\n" for row in matrix)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def random_matrix(n: int, rng: Optional[random.Random] = None, zero_bias: float = 0.0, bound: int = 9) -> Matrix:
    """Integer entries in [-bound, bound]; each entry is forced to 0 with probability ``zero_bias``."""
    rng = rng or random.Random(0)
    return [
        [Fraction(0) if rng.random() < zero_bias else Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        for _ in range(n)
    ]
