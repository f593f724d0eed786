"""
Average-percentage metrics over an ordering.

Both metrics share one shape: 1 - sum(first positions) / (n * m) + 1 / (2n),
with 1-based positions. APFD scans fault columns of a KillMatrix, APSC scans
unit columns of a CoverageMatrix.
"""
from dataclasses import dataclass

import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix
from coverage_model.Ordering import Ordering
from utils.const import StrategyType
from utils.Exceptions import InvariantViolationException, UndetectedFaultException, UniverseMismatchException


@dataclass(frozen=True)
class ApfdRecord:
    strategy_id: StrategyType
    seed: int
    apfd: float
    # unknown when read back from an APFD CSV
    n: int | None = None
    m_faults: int | None = None


def firstPositions(permutation: np.ndarray, dense: np.ndarray, missing: int) -> np.ndarray:
    """1-based position of the first test in `permutation` with each column set; `missing` where none is."""
    n = len(permutation)
    positions = np.empty(n, dtype=np.int64)
    positions[permutation] = np.arange(1, n + 1)
    firsts = np.where(dense, positions[:, np.newaxis], missing).min(axis=0)
    return firsts


def averagePercentage(firsts: np.ndarray, n: int) -> float:
    m = len(firsts)
    return 1.0 - float(firsts.sum()) / (n * m) + 1.0 / (2 * n)


def apsc_score(permutation: np.ndarray, dense: np.ndarray) -> float:
    """APSC of a raw permutation; units no test covers count as position n + 1."""
    n = len(permutation)
    return averagePercentage(firstPositions(permutation, dense, n + 1), n)


def _permutationOf(ordering: Ordering | list[int] | np.ndarray) -> np.ndarray:
    if isinstance(ordering, Ordering):
        return np.asarray(ordering.permutation, dtype=np.int64)
    return np.asarray(ordering, dtype=np.int64)


def apfd(ordering: Ordering, kills: KillMatrix) -> ApfdRecord:
    if ordering.n != kills.n:
        raise UniverseMismatchException(f"ordering ranks {ordering.n} tests, kill matrix has {kills.n}")

    n = kills.n
    firsts = firstPositions(_permutationOf(ordering), kills.dense, n + 1)
    undetected = np.flatnonzero(firsts > n)
    if len(undetected) > 0:
        raise UndetectedFaultException(int(undetected[0]))

    value = averagePercentage(firsts, n)
    if not 0.0 < value < 1.0:
        raise InvariantViolationException(f"APFD {value} outside (0, 1)")
    return ApfdRecord(ordering.strategy_id, ordering.seed, value, n, kills.fault_count)


def apsc(ordering: Ordering | list[int] | np.ndarray, matrix: CoverageMatrix) -> float:
    permutation = _permutationOf(ordering)
    if len(permutation) != matrix.n:
        raise UniverseMismatchException(f"ordering ranks {len(permutation)} tests, coverage matrix has {matrix.n}")
    return apsc_score(permutation, matrix.dense)
