"""Shared fixtures: the worked example sets and seeded random point sets"""
import itertools

import numpy as np
import pytest

from entities.point_set import PointSet, SpaceParams
from systems.pointset_io import write_point_set

# Four words with all pairwise distances 2; A spans a GF(2) subspace, B does not
SET_A_WORDS = [(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0)]
SET_B_WORDS = [(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1)]


@pytest.fixture
def set_a() -> PointSet:
    return PointSet.from_words(SET_A_WORDS, q=2)


@pytest.fixture
def set_b() -> PointSet:
    return PointSet.from_words(SET_B_WORDS, q=2)


@pytest.fixture
def tight_binary_pair() -> PointSet:
    """m >= q case where both rank bounds equal 3"""
    return PointSet.from_words([(0, 0, 0, 0), (0, 1, 1, 1)], q=2)


@pytest.fixture
def tight_ternary_pair() -> PointSet:
    """m < q case where both rank bounds equal 2"""
    return PointSet.from_words([(0, 0, 0), (0, 2, 2)], q=3)


def random_point_set(rng: np.random.Generator, q: int, n: int, m: int) -> PointSet:
    """m distinct words of E_q^n drawn without replacement"""
    params = SpaceParams(q, n)
    codes = rng.choice(params.size, size=m, replace=False)
    words = []
    for code in codes.tolist():
        word = []
        for _ in range(n):
            code, s = divmod(code, q)
            word.append(s)
        words.append(tuple(word))
    return PointSet(params, words)


def random_corpus(seed: int, count: int, max_q: int = 6, max_n: int = 8, max_m: int = 16):
    """Seeded stream of point sets with 2 <= q <= max_q, n <= max_n, 2 <= m <= max_m"""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        q = int(rng.integers(2, max_q + 1))
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(2, min(max_m, q ** n) + 1))
        yield random_point_set(rng, q, n, m)


def all_subsets(q: int, n: int, m: int):
    """Every m-subset of E_q^n, words in lexicographic order"""
    params = SpaceParams(q, n)
    for chosen in itertools.combinations(itertools.product(range(q), repeat=n), m):
        yield PointSet(params, chosen)


@pytest.fixture
def point_set_file(tmp_path):
    """Write a point set to a fresh file and return its path"""
    counter = itertools.count()

    def write(points: PointSet, comment=None):
        return write_point_set(points, tmp_path / f"set_{next(counter)}.txt", comment)

    return write
