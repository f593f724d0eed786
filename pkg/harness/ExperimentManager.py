import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from tqdm import tqdm

from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix
from coverage_model.GroupMap import aggregate_kill_rows, aggregate_rows, groups_by_class, parse_group_map
from coverage_model.MatrixIO import loadCoverage, loadKill
from coverage_model.Ordering import Ordering, readOrderings, writeOrderings
from evaluation.ApfdTable import groupByStrategy, readApfdCsv, summarize_apfd, writeApfdCsv
from evaluation.Efficiency import EfficiencyTable, summarize_efficiency
from evaluation.Metrics import ApfdRecord, apfd
from harness.SeedDerivation import deriveRunSeed
from harness.SynthGenerator import writeSynth
from mods.log_control import PrioritizerLogger
from stats.Comparison import StatSummary, compare, compare_against_baseline
from strategies.StrategyManager import StrategyManager
from utils.const import DEFAULT_ALPHA, MatrixFormat, StrategyType
from utils.Exceptions import PlanException, UniverseMismatchException
from utils.PrioritizerParams import ExperimentPlan, SynthSpec

logger = PrioritizerLogger.get_instance().getLogger()


@dataclass(frozen=True)
class RunJob:
    strategy: StrategyType
    run: int
    seed: int


def planJobs(strategies: list[StrategyType], base_seed: int, runs: range) -> list[RunJob]:
    """Jobs in (strategy, run index) order; the order records are written in."""
    return [RunJob(s, r, deriveRunSeed(base_seed, s, r)) for s in strategies for r in runs]


def loadGroupedCoverage(path: str, format: MatrixFormat, groups: str | None = None, group_by_class: bool = False) -> CoverageMatrix:
    matrix = loadCoverage(path, format)
    if groups is not None:
        with open(groups, "r", encoding="utf-8") as f:
            return aggregate_rows(matrix, parse_group_map(f, matrix.test_names))
    if group_by_class:
        return aggregate_rows(matrix, groups_by_class(matrix.test_names))
    return matrix


def loadGroupedKills(
    path: str,
    format: MatrixFormat,
    groups: str | None = None,
    group_by_class: bool = False,
    drop_undetected: bool = False,
) -> KillMatrix:
    kills = loadKill(path, format, allow_undetected=drop_undetected)
    if groups is not None:
        with open(groups, "r", encoding="utf-8") as f:
            kills = aggregate_kill_rows(kills, parse_group_map(f, kills.test_names))
    elif group_by_class:
        kills = aggregate_kill_rows(kills, groups_by_class(kills.test_names))
    if drop_undetected:
        undetected = kills.undetectedFaults()
        if len(undetected) > 0:
            logger.info(f"[Harness] dropping {len(undetected)} undetected fault(s)")
            kills = kills.detectedOnly()
    return kills


def alignKills(kills: KillMatrix, test_names: tuple[str, ...]) -> KillMatrix:
    """Kill rows reordered to follow `test_names`; both sides must name the same tests."""
    position = {name: i for i, name in enumerate(kills.test_names)}
    for name in test_names:
        if name not in position:
            raise UniverseMismatchException("test missing from the kill matrix", name)
    known = set(test_names)
    for name in kills.test_names:
        if name not in known:
            raise UniverseMismatchException("test missing from the coverage matrix", name)
    if tuple(test_names) == kills.test_names:
        return kills
    order = [position[name] for name in test_names]
    return KillMatrix(test_names, kills.fault_count, kills.rows[order], allow_undetected=True)


def writeText(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


class ExperimentManager:
    def __init__(self, plan: ExperimentPlan):
        self.plan = plan.validate()
        StrategyManager.initialize(plan.config)
        # APFD of the last prioritize or bench call, filled only when the plan names a kill matrix
        self.scores: list[ApfdRecord] = []

    def _runJob(self, matrix: CoverageMatrix, job: RunJob) -> Ordering:
        return StrategyManager.runStrategy(job.strategy, matrix, self.plan.config, job.seed)

    def _loadInputs(self) -> tuple[CoverageMatrix, KillMatrix | None]:
        plan = self.plan
        matrix = loadGroupedCoverage(plan.coverage, plan.format, plan.groups, plan.group_by_class)
        if plan.kill is None:
            return matrix, None
        # checked before any run so a mismatched kill file fails fast
        kills = loadGroupedKills(plan.kill, plan.format, plan.groups, plan.group_by_class)
        return matrix, alignKills(kills, matrix.test_names)

    def scoreOrderings(self, orderings: list[Ordering], kills: KillMatrix) -> list[ApfdRecord]:
        self.scores = [apfd(o, kills) for o in orderings]
        for summary in summarize_apfd(self.scores):
            logger.info(
                f"[Harness] {summary.strategy_id}: mean APFD {summary.mean:.4f} "
                f"(median {summary.median:.4f}, {summary.runs} runs, {kills.fault_count} faults)"
            )
        return self.scores

    def prioritize(self) -> list[Ordering]:
        plan = self.plan
        matrix, kills = self._loadInputs()
        jobs = planJobs(plan.strategies, plan.base_seed, range(plan.repeats))
        logger.info(f"[Harness] prioritizing {matrix.n} tests: {len(plan.strategies)} strategies x {plan.repeats} runs, {plan.workers} worker(s)")

        with ThreadPoolExecutor(max_workers=plan.workers) as pool:
            # map yields in submission order whatever the completion order
            orderings = list(
                tqdm(
                    pool.map(lambda job: self._runJob(matrix, job), jobs),
                    total=len(jobs),
                    leave=False,
                    disable=None,
                    desc="prioritize",
                )
            )

        if plan.out is None:
            writeOrderings(orderings, sys.stdout)
        else:
            with open(plan.out, "w", encoding="utf-8", newline="\n") as f:
                writeOrderings(orderings, f)
            logger.info(f"[Harness] wrote {len(orderings)} orderings to {plan.out}")
        if kills is not None:
            self.scoreOrderings(orderings, kills)
        return orderings

    def bench(self) -> EfficiencyTable:
        """Timed runs per strategy, run serially after `warmup` discarded runs."""
        plan = self.plan
        matrix, kills = self._loadInputs()
        orderings: list[Ordering] = []
        for strategy in plan.strategies:
            for job in planJobs([strategy], plan.base_seed, range(plan.warmup)):
                self._runJob(matrix, job)
            timed = planJobs([strategy], plan.base_seed, range(plan.repeats))
            for job in tqdm(timed, leave=False, disable=None, desc=f"bench {strategy}"):
                orderings.append(self._runJob(matrix, job))
            logger.debug(f"[Harness] bench {strategy}: {plan.warmup} warmup + {plan.repeats} timed runs")
        if kills is not None:
            self.scoreOrderings(orderings, kills)
        return summarize_efficiency(orderings)


def evaluate(
    orderingsPath: str,
    killPath: str,
    format: MatrixFormat = "tsv",
    coveragePath: str | None = None,
    drop_undetected: bool = False,
    groups: str | None = None,
    group_by_class: bool = False,
    out: str | None = None,
) -> list[ApfdRecord]:
    kills = loadGroupedKills(killPath, format, groups, group_by_class, drop_undetected)
    if coveragePath is not None:
        matrix = loadGroupedCoverage(coveragePath, format, groups, group_by_class)
        kills = alignKills(kills, matrix.test_names)

    with open(orderingsPath, "r", encoding="utf-8") as f:
        orderings = readOrderings(f)
    records = [apfd(o, kills) for o in orderings]

    if out is None:
        writeApfdCsv(records, sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            writeApfdCsv(records, f)
    logger.info(f"[Harness] evaluated {len(records)} orderings against {kills.fault_count} faults")
    return records


def _label(records: list[ApfdRecord]) -> str:
    return "+".join(groupByStrategy(records).keys())


def compareFiles(
    aPath: str,
    bPath: str | None = None,
    alpha: float = DEFAULT_ALPHA,
    baseline: StrategyType | None = None,
) -> list[tuple[str, str, StatSummary]]:
    """(label a, label b, summary) rows.

    Two files compare their full contents. One file either compares
    `baseline` against every other strategy in it or, without a baseline,
    holds exactly two strategies compared first against second.
    """
    with open(aPath, "r", encoding="utf-8") as f:
        aRecords = readApfdCsv(f)

    if bPath is not None:
        with open(bPath, "r", encoding="utf-8") as f:
            bRecords = readApfdCsv(f)
        return [(_label(aRecords), _label(bRecords), compare(aRecords, bRecords, alpha))]

    if baseline is not None:
        results = compare_against_baseline(aRecords, baseline, alpha)
        return [(baseline, other, summary) for other, summary in results.items()]

    groups = groupByStrategy(aRecords)
    if len(groups) != 2:
        raise PlanException(f"{aPath} holds {len(groups)} strategies; give a second file or --baseline")
    (aId, aValues), (bId, bValues) = groups.items()
    return [(aId, bId, compare(aValues, bValues, alpha))]


def synth(spec: SynthSpec, outDir: str, format: MatrixFormat = "tsv") -> tuple[str, str]:
    return writeSynth(spec, outDir, format)
