"""
Ranks of free graded Lie algebras.

The ranks c_k are read off the Poincaré-Birkhoff-Witt identity
  Π_{k even} (1 - t^k)^{-c_k} · Π_{k odd} (1 + t^k)^{c_k} = 1 / (1 - Σ_g t^{|g|})
one degree at a time.
"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Sequence, Tuple

from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from .errors import InvariantError

logger = logging.getLogger(__name__)


def tensor_series(degrees: Sequence[int], max_degree: int) -> List[int]:
    """Coefficients of 1 / (1 - Σ t^d) through max_degree."""
    coefficients = [1] + [0] * max_degree
    for k in range(1, max_degree + 1):
        coefficients[k] = sum(coefficients[k - d] for d in degrees if d <= k)
    return coefficients


def _multiply_factor(series: List[int], k: int, count: int) -> List[int]:
    """series · (1 - t^k)^{-count} for even k, series · (1 + t^k)^{count} for odd k."""
    top = len(series) - 1
    factor = [0] * (top + 1)
    for j in range(top // k + 1):
        factor[j * k] = comb(count + j - 1, j) if k % 2 == 0 else comb(count, j)
    product = [0] * (top + 1)
    for i, a in enumerate(series):
        if a:
            for j in range(0, top + 1 - i, k):
                product[i + j] += a * factor[j]
    return product


def pbw_series(ranks: Dict[int, int], max_degree: int) -> List[int]:
    """Expand the product side of the PBW identity through max_degree."""
    series = [1] + [0] * max_degree
    for k in sorted(ranks):
        if 1 <= k <= max_degree and ranks[k]:
            series = _multiply_factor(series, k, ranks[k])
    return series


def witt_number(length: int, generators: int) -> int:
    """Dimension of the length-``length`` part of the free Lie algebra on ``generators`` letters."""
    if length < 1:
        raise ValueError("Word length must be positive")
    return int(sum(mobius(length // d) * generators ** d for d in divisors(length)) // length)


@dataclass(frozen=True)
class FreeLieRanks:
    """
    Attributes:
        degrees (Tuple[int, ...]): generator degrees
        max_degree (int): truncation N
        ranks (Dict[int, int]): nonzero dimensions by degree
    """
    degrees: Tuple[int, ...]
    max_degree: int
    ranks: Dict[int, int] = field(default_factory=dict)

    __hash__ = None

    def rank(self, k: int) -> int:
        return self.ranks.get(k, 0)

    def table(self) -> List[Tuple[int, int]]:
        return [(k, self.rank(k)) for k in range(1, self.max_degree + 1)]


def free_lie_ranks(degrees: Sequence[int], max_degree: int) -> FreeLieRanks:
    """
    Ranks of the free graded Lie algebra on generators of the given degrees.

    Args:
        degrees (Sequence[int]): generator degrees, each at least 1
        max_degree (int): truncation degree N

    Returns:
        FreeLieRanks: exact ranks through N

    Raises:
        ValueError: If a degree is below 1 or N is negative
        InvariantError: If the PBW expansion disagrees with the tensor series
    """
    degrees = tuple(sorted(int(d) for d in degrees))
    if not degrees:
        raise ValueError("At least one generator degree is required")
    if any(d < 1 for d in degrees):
        raise ValueError(f"Generator degrees must be at least 1, got {degrees}")
    if max_degree < 0:
        raise ValueError("The truncation degree must be non-negative")

    target = tensor_series(degrees, max_degree)
    series = [1] + [0] * max_degree
    ranks: Dict[int, int] = {}
    for k in range(1, max_degree + 1):
        c = target[k] - series[k]
        if c < 0:
            raise InvariantError(f"Negative Lie rank {c} in degree {k}")
        if c:
            ranks[k] = c
            series = _multiply_factor(series, k, c)
    if series != target:
        raise InvariantError("PBW expansion does not reproduce the tensor series")

    if len(set(degrees)) == 1 and degrees[0] % 2 == 0:
        d = degrees[0]
        for k in range(d, max_degree + 1, d):
            if ranks.get(k, 0) != witt_number(k // d, len(degrees)):
                raise InvariantError(f"PBW rank in degree {k} disagrees with the Witt formula")
    logger.debug(f"Free Lie ranks on {degrees} through {max_degree}: {ranks}")
    return FreeLieRanks(degrees, max_degree, ranks)
