import numpy as np
import pytest

from coverage_model.CoverageMatrix import CoverageMatrix
from evaluation.Metrics import apfd
from strategies.PartitionState import PartitionState
from strategies.Prioritization import (
    additional_greedy,
    lexicographical_greedy,
    ocp,
    run_strategy,
    total_greedy,
)
from strategies.SelectionRecorder import SelectionRecorder
from strategies.StrategyManager import StrategyManager
from utils.const import STRATEGY_TYPES
from utils.Exceptions import UnknownStrategyException
from utils.StrategySettings import GAParams, StrategyConfig

T1, T2, T3, T4 = range(4)
SMALL_GA = StrategyConfig(ga=GAParams(population=10, generations=5))


def test_total_greedy_on_m0(m0):
    seen = set()
    for seed in range(40):
        ordering = total_greedy(m0, seed)
        assert ordering.permutation[:2] == (T2, T4)
        assert set(ordering.permutation[2:]) == {T1, T3}
        assert ordering.instrumentation.tie_count == 1
        assert ordering.instrumentation.recompute_count == 4
        seen.add(ordering.permutation)
    assert len(seen) == 2


def test_total_greedy_identical_rows_is_random():
    matrix = CoverageMatrix.fromIndexLists(["a", "b", "c"], 2, [[0], [0], [0]])
    seen = {total_greedy(matrix, seed).permutation for seed in range(200)}
    assert len(seen) == 6


@pytest.mark.parametrize("strategy", STRATEGY_TYPES)
def test_singleton_matrix(strategy):
    matrix = CoverageMatrix.fromIndexLists(["only"], 3, [[1]])
    ordering = run_strategy(strategy, matrix, SMALL_GA, 7)
    assert ordering.permutation == (0,)
    assert ordering.strategy_id == strategy


def test_ocp_singleton_recomputes_once():
    matrix = CoverageMatrix.fromIndexLists(["only"], 3, [[1]])
    assert ocp(matrix, 0).instrumentation.recompute_count == 1


def test_additional_greedy_on_m0(m0, m0_kills):
    orderings = set()
    values = set()
    for seed in range(1000):
        ordering = additional_greedy(m0, seed)
        orderings.add(ordering.permutation)
        values.add(apfd(ordering, m0_kills).apfd)
    assert orderings == {(T2, T3, T4, T1), (T2, T4, T3, T1)}
    assert values == {0.375, 0.625}


def test_additional_greedy_dominator_then_restart():
    matrix = CoverageMatrix.fromIndexLists(["a", "all", "b", "c"], 4, [[0], [0, 1, 2, 3], [1, 2], [3]])
    ordering = additional_greedy(matrix, 3)
    assert ordering.permutation[0] == 1
    # after the restart the remaining tests are ranked by plain coverage again
    assert ordering.permutation[1] == 2
    assert ordering.instrumentation.restart_count >= 1


def test_ocp_on_m0(m0, m0_kills):
    for seed in range(50):
        recorder = SelectionRecorder()
        ordering = ocp(m0, seed, recorder)
        assert ordering.permutation == (T2, T4, T3, T1)
        assert apfd(ordering, m0_kills).apfd == 0.625
        assert ordering.instrumentation.restart_count == 1
        assert ordering.instrumentation.tie_count == 0
        assert recorder.restartSteps() == [3]
        assert ordering.instrumentation.recompute_count <= additional_greedy(m0, seed).instrumentation.recompute_count


def test_lexicographical_on_m0(m0):
    recorder = SelectionRecorder()
    ordering = lexicographical_greedy(m0, 0, recorder)
    assert ordering.permutation[:2] == (T2, T4)
    second = recorder.steps[1].scores
    assert second[T4] == (1, 2)
    assert second[T3] == (1, 1)
    assert second[T1] == (0, 2)


def test_lexicographical_identical_rows():
    matrix = CoverageMatrix.fromIndexLists(["a", "b"], 3, [[0, 2], [0, 2]])
    seen = set()
    for seed in range(30):
        ordering = lexicographical_greedy(matrix, seed)
        assert ordering.instrumentation.tie_count == 1
        seen.add(ordering.permutation)
    assert seen == {(0, 1), (1, 0)}


def test_run_strategy_stamps_ordering(m0):
    ordering = run_strategy("total", m0, StrategyConfig(), 7)
    assert ordering.strategy_id == "total"
    assert ordering.seed == 7
    assert ordering.instrumentation.elapsed_ns > 0
    assert run_strategy("ocp", m0, None, 123).permutation == (T2, T4, T3, T1)


@pytest.mark.parametrize("strategy", STRATEGY_TYPES)
def test_run_strategy_is_deterministic(strategy, random_matrix):
    matrix = random_matrix(np.random.default_rng(8), 25, 60, 0.2)
    a = run_strategy(strategy, matrix, SMALL_GA, 2024)
    b = run_strategy(strategy, matrix, SMALL_GA, 2024)
    assert a.permutation == b.permutation
    assert a.instrumentation.recompute_count == b.instrumentation.recompute_count
    assert a.instrumentation.tie_count == b.instrumentation.tie_count


@pytest.mark.parametrize("strategy", STRATEGY_TYPES)
def test_outputs_are_permutations(strategy, random_instances):
    for i, matrix in enumerate(random_instances(20, seed=31, n_range=(1, 30), m_range=(1, 40))):
        ordering = run_strategy(strategy, matrix, SMALL_GA, i)
        assert sorted(ordering.permutation) == list(range(matrix.n))


def test_zero_coverage_rows_are_ordered():
    matrix = CoverageMatrix.fromIndexLists(["a", "b", "c", "d"], 3, [[], [0], [], []])
    for strategy in STRATEGY_TYPES:
        ordering = run_strategy(strategy, matrix, SMALL_GA, 1)
        assert sorted(ordering.permutation) == [0, 1, 2, 3]
        if strategy in ("total", "additional", "ocp", "unified", "lexicographical"):
            assert ordering.permutation[0] == 1


def test_unknown_strategy(m0):
    with pytest.raises(UnknownStrategyException):
        run_strategy("random", m0)
    with pytest.raises(UnknownStrategyException):
        StrategyManager.loadStrategy("random")


def test_partition_state():
    state = PartitionState(range(4), 5, 5)
    assert state.levels() == [5]
    members = state.take(5)
    assert members == [0, 1, 2, 3] and len(state) == 0
    state.file(0, 3)
    state.file(1, 1)
    state.file(2, 3)
    assert state.levels() == [3, 1]
    assert state.members(3) == [0, 2]
    state.discard(0)
    assert 0 not in state and state.members(3) == [2]
    state.resetAll(5)
    assert state.levels() == [5] and state.members(5) == [1, 2]
    with pytest.raises(ValueError):
        state.file(9, 6)
