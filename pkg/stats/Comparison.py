import csv
import io
from dataclasses import dataclass
from typing import Iterable

from evaluation.ApfdTable import groupByStrategy
from evaluation.Metrics import ApfdRecord
from mods.log_control import PrioritizerLogger
from stats.MannWhitney import mann_whitney_u
from stats.VarghaDelaney import effect_magnitude, vargha_delaney_a12
from utils.const import DEFAULT_ALPHA, EffectMagnitude, StrategyType, Verdict
from utils.Exceptions import EmptySampleException

logger = PrioritizerLogger.get_instance().getLogger()


@dataclass(frozen=True)
class StatSummary:
    p_value: float
    a12: float
    verdict: Verdict
    alpha: float
    sample_sizes: tuple[int, int]

    @property
    def magnitude(self) -> EffectMagnitude:
        return effect_magnitude(self.a12)

    def cell(self) -> str:
        """Table cell such as "BETTER (0.88)"."""
        return f"{self.verdict} ({self.a12:.2f})"


def _samples(values: Iterable[ApfdRecord] | Iterable[float]) -> list[float]:
    return [v.apfd if isinstance(v, ApfdRecord) else float(v) for v in values]


def verdictOf(p_value: float, a12: float, alpha: float) -> Verdict:
    if p_value < alpha and a12 > 0.5:
        return "BETTER"
    if p_value < alpha and a12 < 0.5:
        return "WORSE"
    return "NODIFF"


def compare(a, b, alpha: float = DEFAULT_ALPHA) -> StatSummary:
    """Compares sample `a` against sample `b`; A12 is oriented as A12(a, b)."""
    a = _samples(a)
    b = _samples(b)
    p_value = mann_whitney_u(a, b)
    a12 = vargha_delaney_a12(a, b)
    return StatSummary(p_value, a12, verdictOf(p_value, a12, alpha), alpha, (len(a), len(b)))


def compare_against_baseline(
    records: Iterable[ApfdRecord],
    baseline: StrategyType,
    alpha: float = DEFAULT_ALPHA,
) -> dict[StrategyType, StatSummary]:
    """`baseline` compared against every other strategy found in `records`."""
    groups = groupByStrategy(records)
    if baseline not in groups:
        raise EmptySampleException(f"no APFD values for baseline strategy {baseline}")

    results: dict[StrategyType, StatSummary] = {}
    for strategy_id, values in groups.items():
        if strategy_id == baseline:
            continue
        results[strategy_id] = compare(groups[baseline], values, alpha)
        logger.debug(f"[Compare] {baseline} vs {strategy_id}: {results[strategy_id].cell()} p={results[strategy_id].p_value:.4g}")
    return results


SUMMARY_FIELDS = ["a", "b", "n_a", "n_b", "p_value", "a12", "magnitude", "verdict", "cell"]


def renderSummaryCsv(rows: list[tuple[str, str, StatSummary]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SUMMARY_FIELDS)
    for a, b, s in rows:
        writer.writerow([a, b, s.sample_sizes[0], s.sample_sizes[1], f"{s.p_value:.6g}", f"{s.a12:.4f}", s.magnitude, s.verdict, s.cell()])
    return buffer.getvalue()


def renderSummaryText(rows: list[tuple[str, str, StatSummary]]) -> str:
    lines = []
    for a, b, s in rows:
        lines.append(f"{a} vs {b}: {s.cell()}  p={s.p_value:.4g}  effect={s.magnitude}  n=({s.sample_sizes[0]}, {s.sample_sizes[1]})")
    return "\n".join(lines) + "\n"
