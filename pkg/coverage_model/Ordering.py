import json
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from utils.const import STRATEGY_TYPES, UINT64_MASK, StrategyType
from utils.Exceptions import InvariantViolationException, MatrixFormatException, UnknownStrategyException


@dataclass(frozen=True)
class Instrumentation:
    recompute_count: int = 0
    tie_count: int = 0
    restart_count: int = 0
    elapsed_ns: int = 0


@dataclass(frozen=True)
class Ordering:
    permutation: tuple[int, ...]
    strategy_id: StrategyType
    seed: int
    instrumentation: Instrumentation = field(default_factory=Instrumentation)

    def __post_init__(self):
        object.__setattr__(self, "permutation", tuple(int(i) for i in self.permutation))
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise InvariantViolationException(f"{self.strategy_id} produced a non-permutation {list(self.permutation)}")
        if self.strategy_id not in STRATEGY_TYPES:
            raise UnknownStrategyException(self.strategy_id)
        if not 0 <= self.seed <= UINT64_MASK:
            raise InvariantViolationException(f"seed {self.seed} is not an unsigned 64-bit integer")

    @property
    def n(self) -> int:
        return len(self.permutation)


ORDERING_FIELDS = ["strategy", "seed", "permutation", "recompute_count", "tie_count", "restart_count", "elapsed_ns"]
TIMING_FIELDS = ["elapsed_ns"]


def serialize_ordering(ordering: Ordering) -> str:
    record = {
        "strategy": ordering.strategy_id,
        "seed": ordering.seed,
        "permutation": list(ordering.permutation),
        "recompute_count": ordering.instrumentation.recompute_count,
        "tie_count": ordering.instrumentation.tie_count,
        "restart_count": ordering.instrumentation.restart_count,
        "elapsed_ns": ordering.instrumentation.elapsed_ns,
    }
    return json.dumps(record, separators=(", ", ": "))


def parse_ordering(line: str, lineNo: int | None = None, source: str | None = None) -> Ordering:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as e:
        raise MatrixFormatException(f"invalid ordering record: {e.msg}", lineNo, source)
    missing = [key for key in ORDERING_FIELDS if key not in record]
    if missing:
        raise MatrixFormatException(f"ordering record misses {', '.join(missing)}", lineNo, source)
    if record["strategy"] not in STRATEGY_TYPES:
        raise MatrixFormatException(f"unknown strategy {record['strategy']!r}", lineNo, source)
    try:
        return Ordering(
            permutation=tuple(record["permutation"]),
            strategy_id=record["strategy"],
            seed=int(record["seed"]),
            instrumentation=Instrumentation(
                recompute_count=int(record["recompute_count"]),
                tie_count=int(record["tie_count"]),
                restart_count=int(record["restart_count"]),
                elapsed_ns=int(record["elapsed_ns"]),
            ),
        )
    except InvariantViolationException as e:
        raise MatrixFormatException(e.message, lineNo, source)


def readOrderings(source: TextIO) -> list[Ordering]:
    name = getattr(source, "name", None)
    orderings = []
    for lineNo, line in enumerate(source, start=1):
        if line.strip() == "":
            continue
        orderings.append(parse_ordering(line, lineNo, name))
    return orderings


def writeOrderings(orderings: Iterable[Ordering], sink: TextIO):
    for ordering in orderings:
        sink.write(serialize_ordering(ordering) + "\n")


def maskTiming(line: str) -> str:
    """The record with timing fields zeroed, for determinism comparisons."""
    record = json.loads(line)
    for key in TIMING_FIELDS:
        record[key] = 0
    return json.dumps(record, separators=(", ", ": "))
