from dataclasses import dataclass
from typing import Protocol

import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from utils.const import StrategyType


@dataclass
class StrategyCounters:
    recompute_count: int = 0
    tie_count: int = 0
    restart_count: int = 0


class Strategy(Protocol):
    strategyType: StrategyType

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        ...

    def getStrategyInfo(self):
        return {
            "strategyType": self.strategyType,
        }


def pickAtRandom(ties: np.ndarray | list[int], rng: np.random.Generator, counters: StrategyCounters) -> int:
    """Uniform choice among tied candidates; counts the selection as a tie when there is a choice."""
    if len(ties) > 1:
        counters.tie_count += 1
        return int(ties[rng.integers(len(ties))])
    return int(ties[0])
