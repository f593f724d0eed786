"""
Fixed-width packed bit rows.

A row of width m is stored as ceil(m / 64) uint64 words; bit j of the row is
bit (j % 64) of word j // 64. Padding bits past m are always zero, so
popcounts never need masking.
"""
from typing import Any, TypeAlias

import numpy as np

WORD_BITS = 64

BitRow: TypeAlias = np.ndarray[Any, np.dtype[np.uint64]]


def wordCount(width: int) -> int:
    return (width + WORD_BITS - 1) // WORD_BITS


def packRows(dense: np.ndarray) -> np.ndarray:
    """(n, m) bool -> (n, words) uint64."""
    dense = np.asarray(dense, dtype=bool)
    if dense.ndim != 2:
        raise ValueError("packRows expects a 2-D array")
    n, m = dense.shape
    words = wordCount(m)
    padded = np.zeros((n, words * WORD_BITS), dtype=bool)
    padded[:, :m] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(n, words)


def unpackRows(rows: np.ndarray, width: int) -> np.ndarray:
    """(n, words) uint64 -> (n, m) bool."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    asBytes = rows.view(np.uint8).reshape(rows.shape[0], -1)
    return np.unpackbits(asBytes, axis=1, count=width, bitorder="little").astype(bool)


def rowsFromIndexLists(indexLists: list[list[int]], width: int) -> np.ndarray:
    dense = np.zeros((len(indexLists), width), dtype=bool)
    for i, indices in enumerate(indexLists):
        if len(indices) > 0:
            dense[i, indices] = True
    return packRows(dense)


def emptyRow(width: int) -> BitRow:
    return np.zeros(wordCount(width), dtype=np.uint64)


def popcount(rows: np.ndarray) -> np.ndarray | int:
    """Popcount of the last axis: a single row gives an int, a 2-D block gives one count per row."""
    counts = np.bitwise_count(rows).sum(axis=-1, dtype=np.int64)
    if np.ndim(counts) == 0:
        return int(counts)
    return counts


def additionalCounts(rows: np.ndarray, covered: BitRow) -> np.ndarray | int:
    """Masked-AND popcount: units of each row not yet in `covered`."""
    return popcount(rows & ~covered)


def intersectionCounts(rows: np.ndarray, other: BitRow) -> np.ndarray | int:
    return popcount(rows & other)


def unionCounts(rows: np.ndarray, other: BitRow) -> np.ndarray | int:
    return popcount(rows | other)
