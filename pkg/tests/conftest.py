import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix  # noqa: E402

# t1:{s1,s3} t2:{s1,s3,s4,s6} t3:{s2,s3} t4:{s1,s4,s5}, units 0-based
M0_COVERS = [[0, 2], [0, 2, 3, 5], [1, 2], [0, 3, 4]]
M0_NAMES = ["t1", "t2", "t3", "t4"]


@pytest.fixture
def m0() -> CoverageMatrix:
    return CoverageMatrix.fromIndexLists(M0_NAMES, 6, M0_COVERS)


@pytest.fixture
def m0_kills() -> KillMatrix:
    # the single fault only t4 detects
    return KillMatrix.fromIndexLists(M0_NAMES, 1, [[], [], [], [0]])


def randomMatrix(rng: np.random.Generator, n: int, m: int, density: float) -> CoverageMatrix:
    dense = rng.random((n, m)) < density
    return CoverageMatrix.fromDense([f"t{i}" for i in range(n)], dense)


def randomInstances(count: int, seed: int, n_range=(10, 51), m_range=(5, 101), densities=(0.05, 0.2, 0.5)):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(*n_range))
        m = int(rng.integers(*m_range))
        density = densities[i % len(densities)]
        yield randomMatrix(rng, n, m, density)


@pytest.fixture
def random_matrix():
    return randomMatrix


@pytest.fixture
def random_instances():
    return randomInstances
