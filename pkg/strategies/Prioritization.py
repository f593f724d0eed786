"""Function-style entry points, one per strategy, over StrategyManager."""
from dataclasses import replace

from coverage_model.CoverageMatrix import CoverageMatrix
from coverage_model.Ordering import Ordering
from strategies.SelectionRecorder import SelectionRecorder
from strategies.StrategyManager import StrategyManager
from utils.const import StrategyType
from utils.StrategySettings import GAParams, StrategyConfig


def run_strategy(
    strategy_id: StrategyType,
    matrix: CoverageMatrix,
    config: StrategyConfig | None = None,
    seed: int = 0,
    recorder: SelectionRecorder | None = None,
) -> Ordering:
    config = (config if config is not None else StrategyConfig()).validate()
    return StrategyManager.runStrategy(strategy_id, matrix, config, seed, recorder)


def total_greedy(matrix: CoverageMatrix, seed: int = 0, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("total", matrix, None, seed, recorder)


def additional_greedy(matrix: CoverageMatrix, seed: int = 0, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("additional", matrix, None, seed, recorder)


def ocp(matrix: CoverageMatrix, seed: int = 0, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("ocp", matrix, None, seed, recorder)


def unified_greedy(matrix: CoverageMatrix, seed: int = 0, ratio: float = 0.5, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("unified", matrix, StrategyConfig(unified_ratio=ratio), seed, recorder)


def lexicographical_greedy(matrix: CoverageMatrix, seed: int = 0, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("lexicographical", matrix, None, seed, recorder)


def art_based(matrix: CoverageMatrix, seed: int = 0, candidate_size: int = 10, recorder: SelectionRecorder | None = None) -> Ordering:
    return run_strategy("art", matrix, StrategyConfig(art_candidate_size=candidate_size), seed, recorder)


def search_based(matrix: CoverageMatrix, seed: int = 0, ga: GAParams | None = None, recorder: SelectionRecorder | None = None) -> Ordering:
    config = StrategyConfig()
    if ga is not None:
        config = replace(config, ga=ga)
    return run_strategy("search", matrix, config, seed, recorder)
