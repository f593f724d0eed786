import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import SCORE_TIE_TOLERANCE, StrategyType


class UnifiedGreedyStrategy(Strategy):
    """Scores a test by the summed weight of the units it covers.

    Unit weights start at 1 and are multiplied by (1 - ratio) each time a
    selected test covers them. ratio 0 behaves as total-greedy, ratio 1 as
    additional-greedy without restarts.
    """

    def __init__(self, ratio: float):
        super().__init__()
        self.strategyType: StrategyType = "unified"
        self.ratio = ratio

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        dense = matrix.dense
        weights = np.ones(matrix.unit_count, dtype=np.float64)
        decay = 1.0 - self.ratio
        alive = np.ones(matrix.n, dtype=bool)
        order: list[int] = []

        for _ in range(matrix.n):
            candidates = np.flatnonzero(alive)
            scores = dense[candidates].astype(np.float64) @ weights
            counters.recompute_count += len(candidates)
            best = float(scores.max())
            ties = candidates[np.abs(scores - best) <= SCORE_TIE_TOLERANCE]
            pick = pickAtRandom(ties, rng, counters)

            weights[dense[pick]] *= decay
            alive[pick] = False
            order.append(pick)
            if recorder is not None:
                recorder.record(pick, best, False, dict(zip(candidates.tolist(), scores.tolist())))

        return order

    def getStrategyInfo(self):
        return {
            "strategyType": self.strategyType,
            "ratio": self.ratio,
        }
