from functools import cached_property

import numpy as np

from coverage_model.BitRows import packRows, popcount, rowsFromIndexLists, unpackRows, wordCount
from utils.Exceptions import MatrixFormatException, UndetectedFaultException


class BitMatrix:
    """Immutable n x width boolean matrix over named tests, rows stored packed."""

    def __init__(self, test_names: list[str] | tuple[str, ...], width: int, rows: np.ndarray):
        test_names = tuple(test_names)
        if len(test_names) < 1:
            raise MatrixFormatException("matrix needs at least one test")
        if width < 1:
            raise MatrixFormatException(f"column count must be positive, got {width}")
        if len(set(test_names)) != len(test_names):
            seen = set()
            for name in test_names:
                if name in seen:
                    raise MatrixFormatException(f"duplicate test name {name!r}")
                seen.add(name)
        rows = np.array(rows, dtype=np.uint64, copy=True)
        if rows.shape != (len(test_names), wordCount(width)):
            raise MatrixFormatException(f"row block shape {rows.shape} does not fit {len(test_names)}x{width}")
        rows.setflags(write=False)

        self._test_names = test_names
        self._width = width
        self._rows = rows

    @classmethod
    def fromDense(cls, test_names, dense: np.ndarray, **kwargs):
        dense = np.asarray(dense, dtype=bool)
        return cls(test_names, dense.shape[1], packRows(dense), **kwargs)

    @classmethod
    def fromIndexLists(cls, test_names, width: int, indexLists: list[list[int]], **kwargs):
        return cls(test_names, width, rowsFromIndexLists(indexLists, width), **kwargs)

    @property
    def test_names(self) -> tuple[str, ...]:
        return self._test_names

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._test_names)

    @property
    def width(self) -> int:
        return self._width

    @cached_property
    def dense(self) -> np.ndarray:
        dense = unpackRows(self._rows, self._width)
        dense.setflags(write=False)
        return dense

    def popcounts(self) -> np.ndarray:
        return popcount(self._rows)

    def indexLists(self) -> list[list[int]]:
        return [np.flatnonzero(row).tolist() for row in self.dense]

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (
            self._test_names == other._test_names
            and self._width == other._width
            and np.array_equal(self._rows, other._rows)
        )

    def __hash__(self):
        return hash((type(self).__name__, self._test_names, self._width, self._rows.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, width={self._width})"


class CoverageMatrix(BitMatrix):
    """Row i, bit j is set iff test i covers code unit j. Zero-coverage rows are legal."""

    @property
    def unit_count(self) -> int:
        return self.width


class KillMatrix(BitMatrix):
    """Row i, bit f is set iff test i detects fault f.

    Every fault column must have a killer unless constructed with
    allow_undetected=True; detectedOnly() then drops the undetected columns.
    """

    def __init__(self, test_names, width: int, rows: np.ndarray, allow_undetected: bool = False, source: str | None = None):
        super().__init__(test_names, width, rows)
        if not allow_undetected:
            undetected = self.undetectedFaults()
            if len(undetected) > 0:
                raise UndetectedFaultException(undetected[0], source)

    @property
    def fault_count(self) -> int:
        return self.width

    def undetectedFaults(self) -> list[int]:
        return np.flatnonzero(~self.dense.any(axis=0)).tolist()

    def detectedOnly(self) -> "KillMatrix":
        keep = self.dense.any(axis=0)
        if not keep.any():
            raise MatrixFormatException("no fault is detected by any test")
        return KillMatrix.fromDense(self.test_names, self.dense[:, keep])
