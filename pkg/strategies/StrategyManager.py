from typing import Protocol

import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix
from coverage_model.Ordering import Instrumentation, Ordering
from mods.log_control import PrioritizerLogger
from strategies.AdditionalGreedyStrategy import AdditionalGreedyStrategy
from strategies.ARTStrategy import ARTStrategy
from strategies.LexicographicalGreedyStrategy import LexicographicalGreedyStrategy
from strategies.PartitionOrderingStrategy import PartitionOrderingStrategy
from strategies.SearchBasedStrategy import SearchBasedStrategy
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters
from strategies.TotalGreedyStrategy import TotalGreedyStrategy
from strategies.UnifiedGreedyStrategy import UnifiedGreedyStrategy
from utils.const import StrategyType
from utils.Exceptions import UnknownStrategyException
from utils.StrategySettings import StrategyConfig
from utils.Timer import RunTimer

logger = PrioritizerLogger.get_instance().getLogger()


def newGenerator(seed: int) -> np.random.Generator:
    """PCG64 stream for one run; the only randomness a strategy may use."""
    return np.random.Generator(np.random.PCG64(seed))


class StrategyManager(Protocol):
    config: StrategyConfig = StrategyConfig()

    @classmethod
    def initialize(cls, config: StrategyConfig):
        cls.config = config

    @classmethod
    def loadStrategy(cls, strategyType: StrategyType, config: StrategyConfig | None = None) -> Strategy:
        config = config if config is not None else cls.config
        if strategyType == "total":
            return TotalGreedyStrategy()
        elif strategyType == "additional":
            return AdditionalGreedyStrategy()
        elif strategyType == "unified":
            return UnifiedGreedyStrategy(config.unified_ratio)
        elif strategyType == "lexicographical":
            return LexicographicalGreedyStrategy()
        elif strategyType == "art":
            return ARTStrategy(config.art_candidate_size)
        elif strategyType == "search":
            return SearchBasedStrategy(config.ga)
        elif strategyType == "ocp":
            return PartitionOrderingStrategy()
        else:
            logger.error(f"[Prioritizer] strategy not found: {strategyType}")
            raise UnknownStrategyException(strategyType)

    @classmethod
    def runStrategy(
        cls,
        strategyType: StrategyType,
        matrix: CoverageMatrix,
        config: StrategyConfig | None,
        seed: int,
        recorder: SelectionRecorder | None = None,
    ) -> Ordering:
        strategy = cls.loadStrategy(strategyType, config)
        rng = newGenerator(seed)
        counters = StrategyCounters()
        with RunTimer(f"prioritize-{strategyType}") as t:
            permutation = strategy.prioritize(matrix, rng, counters, recorder)
        logger.debug(f"[Prioritizer] {strategy.getStrategyInfo()} seed={seed}: {t.msecs:.3f} ms (recent avg {RunTimer.averageMsecs(t.title):.3f} ms)")

        return Ordering(
            permutation=tuple(permutation),
            strategy_id=strategyType,
            seed=seed,
            instrumentation=Instrumentation(
                recompute_count=counters.recompute_count,
                tie_count=counters.tie_count,
                restart_count=counters.restart_count,
                elapsed_ns=t.nsecs,
            ),
        )
