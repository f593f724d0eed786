import csv
import io
from dataclasses import dataclass, field

import numpy as np

from coverage_model.Ordering import Ordering
from utils.const import STRATEGY_TYPES, StrategyType
from utils.Exceptions import EmptySampleException


@dataclass
class EfficiencyRow:
    strategy_id: StrategyType
    runs: int
    mean_elapsed_ns: float
    median_elapsed_ns: float
    mean_recompute_count: float
    mean_tie_count: float
    mean_restart_count: float


@dataclass
class Improvement:
    """1 - mean(strategy) / mean(reference), for elapsed time and recomputations."""

    strategy_id: StrategyType
    reference_id: StrategyType
    elapsed: float
    recompute: float


@dataclass
class EfficiencyTable:
    rows: list[EfficiencyRow] = field(default_factory=list)
    improvements: list[Improvement] = field(default_factory=list)

    def row(self, strategy_id: StrategyType) -> EfficiencyRow:
        for r in self.rows:
            if r.strategy_id == strategy_id:
                return r
        raise KeyError(strategy_id)

    def improvement(self, strategy_id: StrategyType, reference_id: StrategyType) -> Improvement:
        for imp in self.improvements:
            if imp.strategy_id == strategy_id and imp.reference_id == reference_id:
                return imp
        raise KeyError((strategy_id, reference_id))


def _ratio(a: float, b: float) -> float:
    if b == 0:
        return float("nan")
    return 1.0 - a / b


def summarize_efficiency(orderings: list[Ordering]) -> EfficiencyTable:
    if len(orderings) == 0:
        raise EmptySampleException("no orderings to summarize")

    byStrategy: dict[StrategyType, list[Ordering]] = {}
    for o in orderings:
        byStrategy.setdefault(o.strategy_id, []).append(o)

    table = EfficiencyTable()
    for strategy_id in [s for s in STRATEGY_TYPES if s in byStrategy]:
        runs = byStrategy[strategy_id]
        elapsed = np.array([o.instrumentation.elapsed_ns for o in runs], dtype=np.float64)
        table.rows.append(
            EfficiencyRow(
                strategy_id=strategy_id,
                runs=len(runs),
                mean_elapsed_ns=float(elapsed.mean()),
                median_elapsed_ns=float(np.median(elapsed)),
                mean_recompute_count=float(np.mean([o.instrumentation.recompute_count for o in runs])),
                mean_tie_count=float(np.mean([o.instrumentation.tie_count for o in runs])),
                mean_restart_count=float(np.mean([o.instrumentation.restart_count for o in runs])),
            )
        )

    for a in table.rows:
        for b in table.rows:
            if a is b:
                continue
            table.improvements.append(
                Improvement(
                    strategy_id=a.strategy_id,
                    reference_id=b.strategy_id,
                    elapsed=_ratio(a.mean_elapsed_ns, b.mean_elapsed_ns),
                    recompute=_ratio(a.mean_recompute_count, b.mean_recompute_count),
                )
            )
    return table


EFFICIENCY_FIELDS = [
    "strategy",
    "runs",
    "mean_elapsed_ns",
    "median_elapsed_ns",
    "mean_recompute_count",
    "mean_tie_count",
    "mean_restart_count",
]


def renderEfficiencyCsv(table: EfficiencyTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(EFFICIENCY_FIELDS)
    for r in table.rows:
        writer.writerow([
            r.strategy_id,
            r.runs,
            f"{r.mean_elapsed_ns:.1f}",
            f"{r.median_elapsed_ns:.1f}",
            f"{r.mean_recompute_count:.3f}",
            f"{r.mean_tie_count:.3f}",
            f"{r.mean_restart_count:.3f}",
        ])
    writer.writerow([])
    writer.writerow(["strategy", "reference", "elapsed_improvement", "recompute_improvement"])
    for imp in table.improvements:
        writer.writerow([imp.strategy_id, imp.reference_id, f"{imp.elapsed:.4f}", f"{imp.recompute:.4f}"])
    return buffer.getvalue()


def renderEfficiencyText(table: EfficiencyTable) -> str:
    lines = [f"{'strategy':<16}{'runs':>6}{'mean ms':>12}{'median ms':>12}{'recomputes':>14}{'ties':>10}{'restarts':>10}"]
    for r in table.rows:
        lines.append(
            f"{r.strategy_id:<16}{r.runs:>6}"
            f"{r.mean_elapsed_ns / 1e6:>12.3f}{r.median_elapsed_ns / 1e6:>12.3f}"
            f"{r.mean_recompute_count:>14.1f}{r.mean_tie_count:>10.1f}{r.mean_restart_count:>10.1f}"
        )
    if len(table.improvements) > 0:
        lines.append("")
        for imp in table.improvements:
            lines.append(f"{imp.strategy_id} vs {imp.reference_id}: time {imp.elapsed:+.1%}, recomputes {imp.recompute:+.1%}")
    return "\n".join(lines) + "\n"
