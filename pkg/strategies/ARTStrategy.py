import numpy as np

from coverage_model.BitRows import BitRow, intersectionCounts, unionCounts
from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import StrategyType


def jaccard_distance(a: BitRow, b: BitRow) -> float:
    """1 - |a & b| / |a | b|; two empty rows are at distance 0."""
    union = unionCounts(a, b)
    if union == 0:
        return 0.0
    return 1.0 - intersectionCounts(a, b) / union


def jaccardDistances(rows: np.ndarray, other: BitRow) -> np.ndarray:
    union = unionCounts(rows, other)
    inter = intersectionCounts(rows, other)
    distances = np.zeros(len(rows), dtype=np.float64)
    nonEmpty = union > 0
    distances[nonEmpty] = 1.0 - inter[nonEmpty] / union[nonEmpty]
    return distances


class ARTStrategy(Strategy):
    """Adaptive random prioritization with a fixed-size random candidate set.

    Each candidate's distance to the selected set (minimum Jaccard distance to
    any selected test) is brought up to date only when the candidate is drawn;
    `seen[t]` counts the selected tests already folded into `minDist[t]`.
    """

    def __init__(self, candidate_size: int):
        super().__init__()
        self.strategyType: StrategyType = "art"
        self.candidate_size = candidate_size

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        rows = matrix.rows
        n = matrix.n
        minDist = np.full(n, np.inf)
        seen = np.zeros(n, dtype=np.int64)
        alive = np.ones(n, dtype=bool)

        first = int(rng.integers(n))
        alive[first] = False
        order: list[int] = [first]
        if recorder is not None:
            recorder.record(first, 0.0)

        while len(order) < n:
            remaining = np.flatnonzero(alive)
            size = min(self.candidate_size, len(remaining))
            candidates = np.sort(rng.choice(remaining, size=size, replace=False))

            for t in candidates.tolist():
                pending = order[seen[t]:]
                if len(pending) > 0:
                    distances = jaccardDistances(rows[pending], rows[t])
                    counters.recompute_count += len(pending)
                    minDist[t] = min(minDist[t], float(distances.min()))
                    seen[t] = len(order)

            scores = minDist[candidates]
            best = float(scores.max())
            pick = pickAtRandom(candidates[scores == best], rng, counters)
            alive[pick] = False
            order.append(pick)
            if recorder is not None:
                recorder.record(pick, best, False, dict(zip(candidates.tolist(), scores.tolist())))

        return order

    def getStrategyInfo(self):
        return {
            "strategyType": self.strategyType,
            "candidate_size": self.candidate_size,
        }
