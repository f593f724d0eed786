import numpy as np

from coverage_model.BitRows import additionalCounts, emptyRow, popcount
from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import StrategyType


class AdditionalGreedyStrategy(Strategy):

    def __init__(self):
        super().__init__()
        self.strategyType: StrategyType = "additional"

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        rows = matrix.rows
        covered = emptyRow(matrix.unit_count)
        alive = np.ones(matrix.n, dtype=bool)
        order: list[int] = []

        for _ in range(matrix.n):
            candidates = np.flatnonzero(alive)
            gains = additionalCounts(rows[candidates], covered)
            counters.recompute_count += len(candidates)
            best = int(gains.max())

            restarted = False
            if best == 0 and covered.any():
                covered[:] = 0
                counters.restart_count += 1
                restarted = True
                gains = popcount(rows[candidates])
                counters.recompute_count += len(candidates)
                best = int(gains.max())

            pick = pickAtRandom(candidates[gains == best], rng, counters)
            covered |= rows[pick]
            alive[pick] = False
            order.append(pick)
            if recorder is not None:
                recorder.record(pick, best, restarted, dict(zip(candidates.tolist(), gains.tolist())))

        return order
