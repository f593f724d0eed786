"""
Additional-greedy prioritization with partition ordering.

Candidates are filed by the additional coverage last computed for them
(PartitionState). A selection re-examines partitions from the highest stored
value down and stops as soon as the best recomputed value reaches the next
stored value: nothing filed lower can beat it, since additional coverage
never increases between restarts. On equal recomputed values the candidate
from the higher partition wins; inside one partition ties are broken at
random.
"""
import numpy as np

from coverage_model.BitRows import additionalCounts, emptyRow
from coverage_model.CoverageMatrix import CoverageMatrix
from mods.log_control import PrioritizerLogger
from strategies.PartitionState import PartitionState
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters, pickAtRandom
from utils.const import StrategyType
from utils.Exceptions import InvariantViolationException

logger = PrioritizerLogger.get_instance().getLogger()


class PartitionOrderingStrategy(Strategy):

    def __init__(self):
        super().__init__()
        self.strategyType: StrategyType = "ocp"

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        rows = matrix.rows
        m = matrix.unit_count
        covered = emptyRow(m)
        state = PartitionState(range(matrix.n), m, m)
        order: list[int] = []
        restarted = False

        while len(state) > 0:
            if state.topValue() == 0:
                if covered.any():
                    covered[:] = 0
                    state.resetAll(m)
                    counters.restart_count += 1
                    restarted = True
                    continue
                # left-overs cover nothing at all; no recomputation can change that
                pick = pickAtRandom(state.members(0), rng, counters)
                state.discard(pick)
                order.append(pick)
                if recorder is not None:
                    recorder.record(pick, 0, restarted)
                restarted = False
                continue

            best = -1
            selectable: list[int] = []
            fresh: dict[int, int] = {}
            for level in state.levels():
                if best >= level:
                    break
                members = state.take(level)
                gains = additionalCounts(rows[members], covered).tolist()
                counters.recompute_count += len(members)
                levelBest = max(gains)
                if levelBest > level:
                    raise InvariantViolationException(f"additional coverage rose from {level} to {levelBest} without a restart")
                for t, g in zip(members, gains):
                    fresh[t] = g
                if levelBest > best:
                    best = levelBest
                    selectable = [t for t, g in zip(members, gains) if g == best]

            if best == 0 and covered.any():
                for t, g in fresh.items():
                    state.file(t, g)
                covered[:] = 0
                state.resetAll(m)
                counters.restart_count += 1
                restarted = True
                continue

            pick = pickAtRandom(selectable, rng, counters)
            for t, g in fresh.items():
                if t != pick:
                    state.file(t, g)
            covered |= rows[pick]
            order.append(pick)
            if recorder is not None:
                recorder.record(pick, best, restarted, fresh)
            restarted = False

        logger.debug(f"[OCP] {matrix.n} tests, {counters.recompute_count} recomputations, {counters.restart_count} restarts")
        return order
