import numpy as np

from coverage_model.BitRows import intersectionCounts, packRows
from coverage_model.CoverageMatrix import CoverageMatrix
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import StrategyType


def signature(row: np.ndarray, counts: np.ndarray) -> tuple[int, ...]:
    """(units of `row` covered 0 times so far, 1 time, 2 times, ...) up to the highest count."""
    covered = counts[row]
    return tuple(np.bincount(covered, minlength=int(counts.max()) + 1).tolist())


class LexicographicalGreedyStrategy(Strategy):
    """Prefers tests covering the least-covered units, comparing coverage
    signatures lexicographically.

    The signature of a candidate is never built in full during selection:
    candidates are narrowed one count level at a time, starting from units
    covered zero times, until a single candidate or the last level remains.
    """

    def __init__(self):
        super().__init__()
        self.strategyType: StrategyType = "lexicographical"

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        rows = matrix.rows
        dense = matrix.dense
        counts = np.zeros(matrix.unit_count, dtype=np.int64)
        alive = np.ones(matrix.n, dtype=bool)
        order: list[int] = []

        for _ in range(matrix.n):
            candidates = np.flatnonzero(alive)
            counters.recompute_count += len(candidates)
            survivors = candidates
            for level in range(int(counts.max()) + 1):
                levelMask = packRows((counts == level)[np.newaxis, :])[0]
                hits = intersectionCounts(rows[survivors], levelMask)
                survivors = survivors[hits == hits.max()]
                if len(survivors) == 1:
                    break
            pick = pickAtRandom(survivors, rng, counters)

            if recorder is not None:
                scores = {int(t): signature(dense[t], counts) for t in candidates}
                recorder.record(pick, scores[pick], False, scores)

            counts[dense[pick]] += 1
            alive[pick] = False
            order.append(pick)

        return order
