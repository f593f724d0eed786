"""
Test-granularity aggregation: a GroupMap partitions test indices into groups
(e.g. test methods into their test class) and aggregate_rows ORs member rows.
"""
from typing import Iterator, TextIO

import numpy as np

from coverage_model.CoverageMatrix import BitMatrix, CoverageMatrix, KillMatrix
from mods.log_control import PrioritizerLogger
from utils.Exceptions import GroupMapException

logger = PrioritizerLogger.get_instance().getLogger()


class GroupMap:
    """group identifier -> member test indices, iterated in sorted identifier order."""

    def __init__(self, groups: dict[str, list[int]]):
        self._groups = {name: list(members) for name, members in sorted(groups.items())}
        for name, members in self._groups.items():
            if len(members) == 0:
                raise GroupMapException(f"group {name!r} is empty")

    def __iter__(self) -> Iterator[str]:
        return iter(self._groups)

    def __len__(self) -> int:
        return len(self._groups)

    def __getitem__(self, name: str) -> list[int]:
        return self._groups[name]

    def items(self):
        return self._groups.items()

    def validateAgainst(self, n: int):
        owner: dict[int, str] = {}
        for name, members in self._groups.items():
            for index in members:
                if index < 0 or index >= n:
                    raise GroupMapException(f"group {name!r} references unknown test index {index}")
                if index in owner:
                    raise GroupMapException(f"test index {index} is in both {owner[index]!r} and {name!r}")
                owner[index] = name
        missing = [i for i in range(n) if i not in owner]
        if missing:
            raise GroupMapException(f"test index {missing[0]} belongs to no group")

    @classmethod
    def singletons(cls, test_names) -> "GroupMap":
        return cls({name: [i] for i, name in enumerate(test_names)})


def parse_group_map(source: TextIO, test_names) -> GroupMap:
    """`<group>\\t<test_1> <test_2> ...` per line, test names resolved against test_names."""
    position = {name: i for i, name in enumerate(test_names)}
    groups: dict[str, list[int]] = {}
    for lineNo, line in enumerate(source.read().splitlines(), start=1):
        if line.strip() == "":
            continue
        groupName, _, rest = line.partition("\t")
        groupName = groupName.strip()
        if groupName == "":
            raise GroupMapException("missing group name", lineNo)
        if groupName in groups:
            raise GroupMapException(f"group {groupName!r} declared twice", lineNo)
        members = []
        for testName in rest.split():
            if testName not in position:
                raise GroupMapException(f"unknown test {testName!r}", lineNo)
            members.append(position[testName])
        if len(members) == 0:
            raise GroupMapException(f"group {groupName!r} is empty", lineNo)
        groups[groupName] = members
    return GroupMap(groups)


def groups_by_class(test_names) -> GroupMap:
    """Groups test methods by class: `pkg.Class#method`, `Class::method`, `pkg.Class.method`."""
    groups: dict[str, list[int]] = {}
    for i, name in enumerate(test_names):
        for separator in ("#", "::"):
            if separator in name:
                className = name.split(separator, 1)[0]
                break
        else:
            className = name.rsplit(".", 1)[0]
        groups.setdefault(className or name, []).append(i)
    return GroupMap(groups)


def _aggregate(matrix: BitMatrix, groups: GroupMap) -> tuple[list[str], np.ndarray]:
    groups.validateAgainst(matrix.n)
    names = []
    rows = np.zeros((len(groups), matrix.rows.shape[1]), dtype=np.uint64)
    for g, (name, members) in enumerate(groups.items()):
        rows[g] = np.bitwise_or.reduce(matrix.rows[members], axis=0)
        names.append(name)
    return names, rows


def aggregate_rows(matrix: CoverageMatrix, groups: GroupMap) -> CoverageMatrix:
    names, rows = _aggregate(matrix, groups)
    logger.info(f"[GroupMap] aggregated {matrix.n} tests into {len(names)} groups")
    return CoverageMatrix(names, matrix.unit_count, rows)


def aggregate_kill_rows(kills: KillMatrix, groups: GroupMap) -> KillMatrix:
    names, rows = _aggregate(kills, groups)
    return KillMatrix(names, kills.fault_count, rows, allow_undetected=True)
