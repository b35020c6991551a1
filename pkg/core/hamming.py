"""
Hamming distance, rank and distance-sum computations over point sets
"""
import itertools
import logging
from math import comb
from typing import List, Optional, Tuple

import numpy as np

from core.errors import DimensionError, DomainError, TooFewPointsError
from entities.point_set import (
    ColumnHistogram,
    DistanceMatrix,
    Face,
    IsometryWitness,
    PointSet,
    WordLike,
)

logger = logging.getLogger(__name__)

# canonical_distance_key walks all m! orderings
CANONICAL_KEY_MAX_POINTS = 8


def hamming_distance(x: WordLike, y: WordLike) -> int:
    """Number of coordinates where x and y differ"""
    a = np.asarray(x)
    b = np.asarray(y)
    if a.shape != b.shape:
        raise DimensionError(f"words have different lengths: {a.shape[0]} vs {b.shape[0]}")
    return int(np.count_nonzero(a != b))


def distance_matrix(points: PointSet) -> DistanceMatrix:
    """Filled row by row; peak memory is the m x m result"""
    rows = points.rows
    grid = np.empty((points.m, points.m), dtype=np.int64)
    for i in range(points.m):
        grid[i] = (rows != rows[i]).sum(axis=1)
    return DistanceMatrix(grid)


def distance_sum(points: PointSet) -> int:
    """D_A: Hamming distances summed over unordered pairs of distinct rows"""
    if points.m < 2:
        raise TooFewPointsError(f"distance sum needs at least 2 points, got {points.m}")
    return int(sum(column_contribution(h) for h in column_histograms(points)))


def distance_multiset(points: PointSet) -> Tuple[int, ...]:
    """Sorted pairwise distances; equal for isometric sets"""
    d = distance_matrix(points).entries
    return tuple(sorted(d[np.triu_indices(points.m, k=1)].tolist()))


def column_histogram(points: PointSet, j: int) -> ColumnHistogram:
    column = points.column(j)
    return ColumnHistogram(tuple(int(c) for c in np.bincount(column, minlength=points.q)))


def column_histograms(points: PointSet) -> List[ColumnHistogram]:
    return [column_histogram(points, j) for j in range(points.n)]


def column_contribution(histogram: ColumnHistogram) -> int:
    """Pairs of rows that differ in the column: sum_{k<j} y_k y_j = (m^2 - sum y^2) / 2"""
    m = histogram.m
    return (m * m - sum(y * y for y in histogram.counts)) // 2


def non_constant_columns(points: PointSet) -> np.ndarray:
    rows = points.rows
    return np.flatnonzero((rows != rows[0]).any(axis=0))


def rank(points: PointSet) -> int:
    """R(A): number of non-constant columns of M_A"""
    return int(non_constant_columns(points).size)


def smallest_face(points: PointSet) -> Face:
    """The face spanned by the non-constant columns, other columns pinned to their symbol"""
    free = tuple(int(j) for j in non_constant_columns(points))
    first = points.words[0]
    fixed = tuple((j, first[j]) for j in range(points.n) if j not in free)
    return Face(free_columns=free, fixed=fixed)


def count_faces(n: int, k: int, q: int) -> int:
    """Number of k-dimensional faces of E_q^n: C(n, k) * q^(n-k)"""
    if q < 2:
        raise DomainError(f"alphabet size q must be >= 2, got {q}")
    if n < 0 or not 0 <= k <= n:
        raise DomainError(f"face dimension k={k} must lie in [0, n={n}]")
    return comb(n, k) * q ** (n - k)


def _row_signatures(d: np.ndarray) -> List[Tuple[int, ...]]:
    return [tuple(sorted(row)) for row in d.tolist()]


def is_isometric(first: PointSet, second: PointSet) -> Optional[IsometryWitness]:
    """Lexicographically least distance-preserving bijection, or None.

    Rows of `first` are matched in order; candidate targets are tried by
    increasing index and must carry the same multiset of distances.
    """
    m = first.m
    if second.m != m:
        return None
    if m > 1 and distance_multiset(first) != distance_multiset(second):
        logger.debug("isometry rejected: distance multisets differ")
        return None

    da = distance_matrix(first).entries.tolist()
    db = distance_matrix(second).entries.tolist()
    sig_a = _row_signatures(np.asarray(da))
    sig_b = _row_signatures(np.asarray(db))
    candidates = [[j for j in range(m) if sig_b[j] == sig_a[i]] for i in range(m)]

    mapping: List[int] = []
    used = [False] * m

    def extend(i: int) -> bool:
        if i == m:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            if all(da[i][k] == db[j][mapping[k]] for k in range(i)):
                used[j] = True
                mapping.append(j)
                if extend(i + 1):
                    return True
                mapping.pop()
                used[j] = False
        return False

    if extend(0):
        return IsometryWitness(tuple(mapping))
    return None


def witness_preserves_distances(first: PointSet, second: PointSet, witness: IsometryWitness) -> bool:
    """Check a witness entry by entry against both distance matrices"""
    if len(witness) != first.m or first.m != second.m or sorted(witness.mapping) != list(range(first.m)):
        return False
    da = distance_matrix(first).entries
    db = distance_matrix(second).entries
    perm = np.array(witness.mapping)
    return bool(np.array_equal(da, db[np.ix_(perm, perm)]))


def canonical_distance_key(matrix: DistanceMatrix) -> Tuple[int, ...]:
    """Least row-major flattening over all simultaneous row/column relabelings.

    Two point sets are isometric iff their keys agree.
    """
    m = matrix.m
    if m > CANONICAL_KEY_MAX_POINTS:
        raise DomainError(f"canonical key limited to {CANONICAL_KEY_MAX_POINTS} points, got {m}")
    d = matrix.as_lists()
    best: Optional[Tuple[int, ...]] = None
    for perm in itertools.permutations(range(m)):
        key = tuple(d[perm[i]][perm[j]] for i in range(m) for j in range(m))
        if best is None or key < best:
            best = key
    return best

