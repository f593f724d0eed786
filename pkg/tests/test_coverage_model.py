import io

import numpy as np
import pytest

from coverage_model.BitRows import additionalCounts, packRows, popcount, unpackRows
from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix
from coverage_model.GroupMap import (
    GroupMap,
    aggregate_kill_rows,
    aggregate_rows,
    groups_by_class,
    parse_group_map,
)
from coverage_model.MatrixIO import parse_coverage, parse_kill, serialize_coverage, serialize_kill
from utils.Exceptions import GroupMapException, MatrixFormatException, UndetectedFaultException

M0_TSV = "4 6\nt1\t0 2\nt2\t0 2 3 5\nt3\t1 2\nt4\t0 3 4\n"


def test_bit_rows_pack_across_word_boundary():
    dense = np.zeros((2, 130), dtype=bool)
    dense[0, [0, 63, 64, 129]] = True
    dense[1, 70] = True
    rows = packRows(dense)
    assert rows.shape == (2, 3)
    assert np.array_equal(unpackRows(rows, 130), dense)
    assert popcount(rows).tolist() == [4, 1]
    assert popcount(rows[0]) == 4
    assert additionalCounts(rows, rows[0]).tolist() == [0, 1]


def test_parse_coverage_tsv(m0):
    matrix = parse_coverage(io.StringIO(M0_TSV))
    assert matrix == m0
    assert matrix.n == 4 and matrix.unit_count == 6
    assert matrix.popcounts().tolist() == [2, 4, 2, 3]


def test_parse_coverage_single_bit():
    matrix = parse_coverage(io.StringIO("1 1\nonly\t0\n"))
    assert matrix.dense.tolist() == [[True]]


def test_parse_coverage_allows_empty_row():
    matrix = parse_coverage(io.StringIO("2 3\na\t0 1\nb\t\n"))
    assert matrix.indexLists() == [[0, 1], []]


def test_parse_coverage_unit_out_of_range():
    with pytest.raises(MatrixFormatException) as e:
        parse_coverage(io.StringIO("4 6\nt1\t0 2\nt2\t6\nt3\t1\nt4\t0\n"))
    assert e.value.line == 3
    assert "unit index out of range" in str(e.value)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("four 6\nt1\t0\n", 1, "malformed header"),
        ("2\nt1\t0\n", 1, "malformed header"),
        ("2 3\nt1\t0\nt1\t1\n", 3, "duplicate test name"),
        ("3 3\nt1\t0\nt2\t1\n", 1, "header announces 3 tests"),
        ("2 3\nt1 0 1\nt2\t2\n", 2, "missing tab"),
        ("2 3\nt1\t0\nt2\n", 3, "missing tab"),
        ("2 3\nt1\t0\nmy test\t1\n", 3, "contains whitespace"),
    ],
)
def test_parse_coverage_errors_carry_line(text, line, fragment):
    with pytest.raises(MatrixFormatException) as e:
        parse_coverage(io.StringIO(text))
    assert e.value.line == line
    assert fragment in str(e.value)


def test_parse_coverage_json(m0):
    text = '{"units": 6, "tests": [{"name": "t1", "covers": [0, 2]}, {"name": "t2", "covers": [0, 2, 3, 5]},' \
        ' {"name": "t3", "covers": [1, 2]}, {"name": "t4", "covers": [0, 3, 4]}]}'
    assert parse_coverage(io.StringIO(text), "json") == m0


@pytest.mark.parametrize(
    "text, entry, fragment",
    [
        ('{"units": 3, "tests": [{"name": "a", "covers": [0]}, {"name": "a", "covers": [1]}]}', 1, "duplicate test name"),
        ('{"units": 3, "tests": [{"name": "a", "covers": [0]}, {"name": "b", "covers": [3]}]}', 1, "unit index out of range"),
        ('{"units": 3, "tests": [{"covers": [0]}]}', 0, "string 'name'"),
    ],
)
def test_parse_coverage_json_errors_carry_entry(text, entry, fragment):
    with pytest.raises(MatrixFormatException) as e:
        parse_coverage(io.StringIO(text), "json")
    assert e.value.entry == entry
    assert f"tests[{entry}]" in str(e.value)
    assert fragment in str(e.value)


def test_parse_kill_rejects_space_separated_rows():
    with pytest.raises(MatrixFormatException) as e:
        parse_kill(io.StringIO("2 1\nt1 0\nt2\t0\n"))
    assert e.value.line == 2
    assert "missing tab" in str(e.value)


def test_parse_kill_single_fault():
    kills = parse_kill(io.StringIO("4 1\nt1\t\nt2\t\nt3\t\nt4\t0\n"))
    assert kills.fault_count == 1
    assert kills.dense[:, 0].tolist() == [False, False, False, True]


def test_parse_kill_all_true():
    kills = parse_kill(io.StringIO("2 2\na\t0 1\nb\t1 0\n"))
    assert kills.dense.all()


def test_parse_kill_rejects_undetected_fault():
    with pytest.raises(UndetectedFaultException) as e:
        parse_kill(io.StringIO("2 3\na\t0\nb\t1\n"))
    assert "fault f2 undetected" in str(e.value)


def test_parse_kill_lenient_then_detected_only():
    kills = parse_kill(io.StringIO("2 3\na\t0\nb\t2\n"), allow_undetected=True)
    assert kills.undetectedFaults() == [1]
    detected = kills.detectedOnly()
    assert detected.fault_count == 2
    assert detected.indexLists() == [[0], [1]]


def test_serialize_then_parse_is_identity(random_matrix):
    rng = np.random.default_rng(3)
    matrix = random_matrix(rng, 7, 70, 0.3)
    for format in ("tsv", "json"):
        assert parse_coverage(io.StringIO(serialize_coverage(matrix, format)), format) == matrix
    kills = KillMatrix.fromDense(matrix.test_names, np.eye(7, 4, dtype=bool) | np.eye(7, 4, k=-3, dtype=bool))
    for format in ("tsv", "json"):
        assert parse_kill(io.StringIO(serialize_kill(kills, format)), format) == kills


def test_matrix_rows_are_read_only(m0):
    with pytest.raises(ValueError):
        m0.rows[0, 0] = 0


def test_aggregate_disjoint_rows():
    matrix = CoverageMatrix.fromIndexLists(["a", "b"], 2, [[0], [1]])
    aggregated = aggregate_rows(matrix, GroupMap({"A": [0, 1]}))
    assert aggregated.test_names == ("A",)
    assert aggregated.indexLists() == [[0, 1]]


def test_aggregate_singletons_is_identity(m0):
    assert aggregate_rows(m0, GroupMap.singletons(m0.test_names)) == m0


def test_aggregate_matches_brute_force_or(random_matrix):
    rng = np.random.default_rng(11)
    matrix = random_matrix(rng, 3, 4, 0.5)
    aggregated = aggregate_rows(matrix, GroupMap({"A": [0, 1], "B": [2]}))
    dense = matrix.dense
    expected = [[bool(dense[0, j] or dense[1, j]) for j in range(4)], [bool(dense[2, j]) for j in range(4)]]
    assert aggregated.dense.tolist() == expected


def test_aggregate_popcount_bounds(random_matrix):
    rng = np.random.default_rng(5)
    matrix = random_matrix(rng, 12, 40, 0.2)
    groups = GroupMap({"A": [0, 3, 5], "B": [1, 2], "C": [4, 6, 7, 8], "D": [9, 10, 11]})
    aggregated = aggregate_rows(matrix, groups)
    counts = matrix.popcounts()
    for g, (_, members) in enumerate(groups.items()):
        assert max(counts[members]) <= aggregated.popcounts()[g] <= sum(counts[members])


@pytest.mark.parametrize(
    "groups, fragment",
    [
        ({"A": [0, 1], "B": [2, 9]}, "unknown test index 9"),
        ({"A": [0, 1], "B": [1, 2, 3]}, "in both"),
        ({"A": [0, 1], "B": [2]}, "belongs to no group"),
    ],
)
def test_aggregate_rejects_bad_groups(m0, groups, fragment):
    with pytest.raises(GroupMapException) as e:
        aggregate_rows(m0, GroupMap(groups))
    assert fragment in str(e.value)


def test_parse_group_map(m0):
    groups = parse_group_map(io.StringIO("Z\tt4 t1\nA\tt2 t3\n"), m0.test_names)
    assert list(groups) == ["A", "Z"]
    assert groups["Z"] == [3, 0]
    with pytest.raises(GroupMapException) as e:
        parse_group_map(io.StringIO("A\tt1\nB\tt9\n"), m0.test_names)
    assert e.value.line == 2


def test_groups_by_class():
    names = ["pkg.FooTest#testA", "pkg.FooTest#testB", "BarTest::test_x", "pkg.BazTest.testC", "pkg.FooTest.testD"]
    groups = groups_by_class(names)
    assert dict(groups.items()) == {
        "BarTest": [2],
        "pkg.BazTest": [3],
        "pkg.FooTest": [0, 1, 4],
    }


def test_aggregate_kill_rows():
    kills = KillMatrix.fromIndexLists(["C#a", "C#b", "D#c"], 2, [[0], [], [1]])
    aggregated = aggregate_kill_rows(kills, groups_by_class(kills.test_names))
    assert aggregated.test_names == ("C", "D")
    assert aggregated.indexLists() == [[0], [1]]
