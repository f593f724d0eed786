"""
Readers and writers for the coverage (.cov) and kill (.kill) matrix formats.

TSV:
    <n> <width>
    <test_name>\t<i1> <i2> ...        (0-based indices, list may be empty)

JSON:
    {"units": m,  "tests": [{"name": ..., "covers": [...]}]}
    {"faults": k, "tests": [{"name": ..., "kills":  [...]}]}
"""
import json
from typing import TextIO

from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix
from mods.log_control import PrioritizerLogger
from utils.const import MatrixFormat
from utils.Exceptions import MatrixFormatException

logger = PrioritizerLogger.get_instance().getLogger()

# (width key, list key, index noun) per matrix kind
_COVERAGE_KEYS = ("units", "covers", "unit")
_KILL_KEYS = ("faults", "kills", "fault")


def _sourceName(source: TextIO) -> str | None:
    return getattr(source, "name", None)


def _parseTsv(source: TextIO, noun: str) -> tuple[list[str], int, list[list[int]]]:
    name = _sourceName(source)
    lines = source.read().splitlines()
    # trailing blank lines are tolerated, interior ones are not
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise MatrixFormatException("malformed header: empty input", 1, name)

    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatException(f"malformed header {lines[0]!r}, expected '<n> <width>'", 1, name)
    try:
        n, width = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatException(f"malformed header {lines[0]!r}, expected two integers", 1, name)
    if n < 1 or width < 1:
        raise MatrixFormatException(f"malformed header {lines[0]!r}, counts must be positive", 1, name)
    if len(lines) - 1 != n:
        raise MatrixFormatException(f"header announces {n} tests but {len(lines) - 1} rows follow", 1, name)

    names: list[str] = []
    seen: set[str] = set()
    indexLists: list[list[int]] = []
    for lineNo, line in enumerate(lines[1:], start=2):
        testName, separator, rest = line.partition("\t")
        if separator == "":
            raise MatrixFormatException("missing tab between test name and index list", lineNo, name)
        if testName.strip() == "":
            raise MatrixFormatException("missing test name", lineNo, name)
        if len(testName.split()) != 1 or testName != testName.strip():
            raise MatrixFormatException(f"test name {testName!r} contains whitespace", lineNo, name)
        if testName in seen:
            raise MatrixFormatException(f"duplicate test name {testName!r}", lineNo, name)
        seen.add(testName)
        indices = []
        for token in rest.split():
            try:
                index = int(token)
            except ValueError:
                raise MatrixFormatException(f"{noun} index {token!r} is not an integer", lineNo, name)
            if index < 0 or index >= width:
                raise MatrixFormatException(f"{noun} index out of range: {index} not in [0, {width})", lineNo, name)
            indices.append(index)
        names.append(testName)
        indexLists.append(indices)
    return names, width, indexLists


def _parseJson(source: TextIO, keys: tuple[str, str, str]) -> tuple[list[str], int, list[list[int]]]:
    widthKey, listKey, noun = keys
    name = _sourceName(source)
    try:
        document = json.load(source)
    except json.JSONDecodeError as e:
        raise MatrixFormatException(f"invalid JSON: {e.msg}", e.lineno, name)

    if not isinstance(document, dict) or not isinstance(document.get(widthKey), int) or not isinstance(document.get("tests"), list):
        raise MatrixFormatException(f"malformed header: expected an object with integer '{widthKey}' and list 'tests'", 1, name)
    width = document[widthKey]
    if width < 1:
        raise MatrixFormatException(f"malformed header: '{widthKey}' must be positive", 1, name)
    if len(document["tests"]) < 1:
        raise MatrixFormatException("malformed header: 'tests' is empty", 1, name)

    names: list[str] = []
    seen: set[str] = set()
    indexLists: list[list[int]] = []
    for entryNo, entry in enumerate(document["tests"]):
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise MatrixFormatException("entry needs a string 'name'", None, name, entryNo)
        testName = entry["name"]
        if testName in seen:
            raise MatrixFormatException(f"duplicate test name {testName!r}", None, name, entryNo)
        seen.add(testName)
        indices = entry.get(listKey, [])
        if not isinstance(indices, list):
            raise MatrixFormatException(f"'{listKey}' must be a list", None, name, entryNo)
        for index in indices:
            if not isinstance(index, int) or isinstance(index, bool):
                raise MatrixFormatException(f"{noun} index {index!r} is not an integer", None, name, entryNo)
            if index < 0 or index >= width:
                raise MatrixFormatException(f"{noun} index out of range: {index} not in [0, {width})", None, name, entryNo)
        names.append(testName)
        indexLists.append(list(indices))
    return names, width, indexLists


def parse_coverage(source: TextIO, format: MatrixFormat = "tsv") -> CoverageMatrix:
    if format == "tsv":
        names, width, indexLists = _parseTsv(source, "unit")
    elif format == "json":
        names, width, indexLists = _parseJson(source, _COVERAGE_KEYS)
    else:
        raise MatrixFormatException(f"unknown matrix format {format!r}")
    matrix = CoverageMatrix.fromIndexLists(names, width, indexLists)
    logger.debug(f"[MatrixIO] coverage {matrix.n}x{matrix.unit_count} from {_sourceName(source)}")
    return matrix


def parse_kill(source: TextIO, format: MatrixFormat = "tsv", allow_undetected: bool = False) -> KillMatrix:
    if format == "tsv":
        names, width, indexLists = _parseTsv(source, "fault")
    elif format == "json":
        names, width, indexLists = _parseJson(source, _KILL_KEYS)
    else:
        raise MatrixFormatException(f"unknown matrix format {format!r}")
    kills = KillMatrix.fromIndexLists(names, width, indexLists, allow_undetected=allow_undetected, source=_sourceName(source))
    logger.debug(f"[MatrixIO] kill {kills.n}x{kills.fault_count} from {_sourceName(source)}")
    return kills


def _serialize(names, width, indexLists, format: MatrixFormat, keys: tuple[str, str, str]) -> str:
    if format == "tsv":
        lines = [f"{len(names)} {width}"]
        for testName, indices in zip(names, indexLists):
            lines.append(f"{testName}\t" + " ".join(str(i) for i in indices))
        return "\n".join(lines) + "\n"
    elif format == "json":
        widthKey, listKey, _ = keys
        document = {
            widthKey: width,
            "tests": [{"name": testName, listKey: indices} for testName, indices in zip(names, indexLists)],
        }
        return json.dumps(document) + "\n"
    raise MatrixFormatException(f"unknown matrix format {format!r}")


def serialize_coverage(matrix: CoverageMatrix, format: MatrixFormat = "tsv") -> str:
    return _serialize(matrix.test_names, matrix.unit_count, matrix.indexLists(), format, _COVERAGE_KEYS)


def serialize_kill(kills: KillMatrix, format: MatrixFormat = "tsv") -> str:
    return _serialize(kills.test_names, kills.fault_count, kills.indexLists(), format, _KILL_KEYS)


def loadCoverage(path: str, format: MatrixFormat = "tsv") -> CoverageMatrix:
    with open(path, "r", encoding="utf-8") as f:
        return parse_coverage(f, format)


def loadKill(path: str, format: MatrixFormat = "tsv", allow_undetected: bool = False) -> KillMatrix:
    with open(path, "r", encoding="utf-8") as f:
        return parse_kill(f, format, allow_undetected)
