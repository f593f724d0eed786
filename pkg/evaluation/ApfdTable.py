import csv
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from evaluation.Metrics import ApfdRecord
from utils.const import STRATEGY_TYPES, StrategyType
from utils.Exceptions import MatrixFormatException

APFD_FIELDS = ["strategy", "seed", "apfd"]


def writeApfdCsv(records: Iterable[ApfdRecord], sink: TextIO):
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(APFD_FIELDS)
    for r in records:
        writer.writerow([r.strategy_id, r.seed, repr(r.apfd)])


def readApfdCsv(source: TextIO) -> list[ApfdRecord]:
    name = getattr(source, "name", None)
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != APFD_FIELDS:
        raise MatrixFormatException(f"expected header {','.join(APFD_FIELDS)}", 1, name)

    records = []
    for row in reader:
        lineNo = reader.line_num
        if len(row) == 0:
            continue
        if len(row) != len(APFD_FIELDS):
            raise MatrixFormatException(f"expected {len(APFD_FIELDS)} fields, got {len(row)}", lineNo, name)
        strategy, seed, value = (field.strip() for field in row)
        if strategy not in STRATEGY_TYPES:
            raise MatrixFormatException(f"unknown strategy {strategy!r}", lineNo, name)
        try:
            records.append(ApfdRecord(strategy, int(seed), float(value)))
        except ValueError:
            raise MatrixFormatException(f"malformed APFD row {row}", lineNo, name)
    return records


def groupByStrategy(records: Iterable[ApfdRecord]) -> dict[StrategyType, list[float]]:
    """APFD samples per strategy, strategies in first-appearance order."""
    groups: dict[StrategyType, list[float]] = {}
    for r in records:
        groups.setdefault(r.strategy_id, []).append(r.apfd)
    return groups


@dataclass
class ApfdSummary:
    strategy_id: StrategyType
    runs: int
    mean: float
    min: float
    q1: float
    median: float
    q3: float
    max: float


def summarize_apfd(records: Iterable[ApfdRecord]) -> list[ApfdSummary]:
    """Box-plot statistics of the APFD distribution of each strategy."""
    summaries = []
    for strategy_id, values in groupByStrategy(records).items():
        v = np.asarray(values, dtype=np.float64)
        q1, median, q3 = np.percentile(v, [25, 50, 75])
        summaries.append(ApfdSummary(strategy_id, len(v), float(v.mean()), float(v.min()), float(q1), float(median), float(q3), float(v.max())))
    return summaries


def writeApfdSummaryCsv(summaries: Iterable[ApfdSummary], sink: TextIO):
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["strategy", "runs", "mean", "min", "q1", "median", "q3", "max"])
    for s in summaries:
        writer.writerow([s.strategy_id, s.runs] + [f"{x:.6f}" for x in (s.mean, s.min, s.q1, s.median, s.q3, s.max)])
