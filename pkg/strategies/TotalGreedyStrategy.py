import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import StrategyType


class TotalGreedyStrategy(Strategy):

    def __init__(self):
        super().__init__()
        self.strategyType: StrategyType = "total"

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        # one popcount pass; scores never change afterwards
        totals = matrix.popcounts()
        counters.recompute_count += matrix.n
        alive = np.ones(matrix.n, dtype=bool)
        order: list[int] = []

        for _ in range(matrix.n):
            candidates = np.flatnonzero(alive)
            scores = totals[candidates]
            best = int(scores.max())
            pick = pickAtRandom(candidates[scores == best], rng, counters)
            alive[pick] = False
            order.append(pick)
            if recorder is not None:
                recorder.record(pick, best, False, dict(zip(candidates.tolist(), scores.tolist())))

        return order
