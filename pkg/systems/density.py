"""
Exact metric-density decisions by minimum-dimension realization search.

A realization of an m x m distance matrix is an ordered list of m words
whose pairwise Hamming distances reproduce the matrix. The least rank over
all isometric images of a set equals the least dimension r in which its
matrix has a realization using every column non-constantly, so deciding
density reduces to a feasibility search per dimension.

Search rules (each keeps at least one realization per equivalence class):
  * row 0 is the all-zero word (symbols can be relabelled per column);
  * scanning down a column, new symbols appear in increasing order;
  * columns, read top to bottom, are in non-decreasing lexicographic order.
"""
import itertools
import logging
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.constants import SURVEY_CLASS_MAX_POINTS, SURVEY_DEFAULT_EXAMPLES, SURVEY_MAX_SETS
from core.bounds import bounds_report, rank_lower_bound, rank_upper_bound
from core.errors import DomainError, TooFewPointsError
from core.hamming import canonical_distance_key, distance_matrix, is_isometric, rank
from entities.point_set import DistanceMatrix, PointSet, SpaceParams
from entities.reports import (
    Certificate,
    DensityVerdict,
    EmbeddingResult,
    EmbeddingStatus,
    RealizationAttempt,
    SearchConfig,
    SurveyReport,
    Verdict,
)
from systems.finite_field import is_uniform_columns

logger = logging.getLogger(__name__)

MatrixLike = Union[DistanceMatrix, Sequence[Sequence[int]], np.ndarray]


class _BudgetExhausted(Exception):
    pass


def _as_matrix(matrix: MatrixLike) -> DistanceMatrix:
    dm = matrix if isinstance(matrix, DistanceMatrix) else DistanceMatrix(matrix)
    dm.check_metric()
    return dm


class _RealizationSearch:
    """Depth-first search over the cells of rows 1..m-1, row-major order"""

    def __init__(self, target: List[List[int]], q: int, r: int, budget: int):
        self.d = target
        self.q = q
        self.r = r
        self.m = len(target)
        self.budget = budget
        self.nodes = 0
        self.rows = [[0] * r for _ in range(self.m)]
        # partial[i][j]: distance between rows i and j over the columns placed so far
        self.partial = [[0] * self.m for _ in range(self.m)]
        self.colmax = [0] * r
        # tied[c]: columns c and c+1 agree on every completed cell above
        self.tied = [True] * max(r - 1, 0)

    def _bounds(self, i: int, c: int):
        row = self.rows[i]
        lo = row[c - 1] if c > 0 and self.tied[c - 1] else 0
        if i == self.m - 1 and self.colmax[c] == 0:
            lo = max(lo, 1)  # last chance to make the column non-constant
        hi = min(self.q - 1, self.colmax[c] + 1)
        return lo, hi

    def _fits(self, i: int, c: int, s: int) -> bool:
        remaining = self.r - c - 1
        d_row, part = self.d[i], self.partial[i]
        for j in range(i):
            dist = part[j] + (s != self.rows[j][c])
            if dist > d_row[j] or dist + remaining < d_row[j]:
                return False
        return True

    def _place(self, i: int, c: int, s: int):
        self.rows[i][c] = s
        part = self.partial[i]
        for j in range(i):
            part[j] += s != self.rows[j][c]
        saved = (self.colmax[c], self.tied[c - 1] if c > 0 else None)
        self.colmax[c] = max(self.colmax[c], s)
        if c > 0:
            self.tied[c - 1] = self.tied[c - 1] and self.rows[i][c - 1] == s
        return saved

    def _undo(self, i: int, c: int, saved):
        s = self.rows[i][c]
        part = self.partial[i]
        for j in range(i):
            part[j] -= s != self.rows[j][c]
        self.colmax[c] = saved[0]
        if c > 0:
            self.tied[c - 1] = saved[1]
        self.rows[i][c] = 0

    def run(self) -> Optional[List[List[int]]]:
        cells = [(i, c) for i in range(1, self.m) for c in range(self.r)]
        if not cells:
            return None
        next_symbol: List[Optional[int]] = [None] * len(cells)
        upper: List[int] = [0] * len(cells)
        saved: List[tuple] = [()] * len(cells)
        t = 0
        while True:
            if t == len(cells):
                return [list(row) for row in self.rows]
            i, c = cells[t]
            if next_symbol[t] is None:
                next_symbol[t], upper[t] = self._bounds(i, c)
            placed = False
            while next_symbol[t] <= upper[t]:
                s = next_symbol[t]
                next_symbol[t] = s + 1
                self.nodes += 1
                if self.nodes > self.budget:
                    raise _BudgetExhausted
                if self._fits(i, c, s):
                    saved[t] = self._place(i, c, s)
                    placed = True
                    break
            if placed:
                t += 1
                continue
            next_symbol[t] = None
            t -= 1
            if t < 0:
                return None
            self._undo(*cells[t], saved[t])


def realize_in_dimension(matrix: MatrixLike, q: int, r: int, budget: int) -> RealizationAttempt:
    """Canonically least realization of `matrix` in E_q^r using every column, if any"""
    dm = _as_matrix(matrix)
    if q < 2:
        raise DomainError(f"alphabet size q must be >= 2, got {q}")
    if r < 0:
        raise DomainError(f"dimension must be >= 0, got {r}")
    if budget < 1:
        raise DomainError(f"node budget must be >= 1, got {budget}")
    if dm.m < 2:
        raise TooFewPointsError("a realization search needs at least 2 points")
    if r == 0 or dm.max_entry > r:
        return RealizationAttempt(None, 0)

    search = _RealizationSearch(dm.as_lists(), q, r, budget)
    try:
        rows = search.run()
    except _BudgetExhausted:
        logger.debug("budget of %d nodes exhausted at r=%d", budget, r)
        return RealizationAttempt(None, search.nodes - 1, exhausted=True)
    if rows is None:
        return RealizationAttempt(None, search.nodes)
    return RealizationAttempt(PointSet(SpaceParams(q, r), rows), search.nodes)


def min_embedding_dimension(matrix: MatrixLike, q: int, cfg: SearchConfig) -> EmbeddingResult:
    """Least r with a realization, trying r upward from the rank lower bound.

    The node budget is shared by every dimension tried. The search stops at
    floor(D / (m - 1)) (or cfg.max_dimension if smaller): every realization
    with all columns in use obeys the rank upper bound.
    """
    dm = _as_matrix(matrix)
    m = dm.m
    if m < 2:
        raise TooFewPointsError("embedding dimension needs at least 2 points")
    total = dm.total()
    lower = rank_lower_bound(total, m, q)
    start = max(1, -((-lower.numerator) // lower.denominator))
    cap = int(rank_upper_bound(total, m))
    if cfg.max_dimension is not None:
        cap = min(cap, cfg.max_dimension)

    nodes = 0
    last = start
    for r in range(start, cap + 1):
        last = r
        remaining = cfg.node_budget - nodes
        if remaining < 1:
            return EmbeddingResult(EmbeddingStatus.BUDGET_EXHAUSTED, r, nodes)
        logger.info("trying dimension %d for %d points over q=%d", r, m, q)
        attempt = realize_in_dimension(dm, q, r, remaining)
        nodes += attempt.nodes_explored
        if attempt.exhausted:
            return EmbeddingResult(EmbeddingStatus.BUDGET_EXHAUSTED, r, nodes)
        if attempt.found:
            logger.debug("dimension %d feasible after %d nodes", r, nodes)
            return EmbeddingResult(EmbeddingStatus.EXACT, r, nodes, attempt.realization)
        logger.debug("dimension %d infeasible", r)
    return EmbeddingResult(EmbeddingStatus.INFEASIBLE, last, nodes)


def is_metrically_dense(points: PointSet, cfg: SearchConfig) -> DensityVerdict:
    """Dense iff no isometric image has smaller rank.

    The bound certificate settles most sets; otherwise the search asks for a
    realization in fewer than rank(S) columns.
    """
    if points.m < 2:
        raise TooFewPointsError("density needs at least 2 points")
    report = bounds_report(points)
    r = report.rank
    if report.density_certified:
        return DensityVerdict(Verdict.DENSE, Certificate.BOUND_CERTIFICATE, rank=r, min_dimension=r)

    if r <= 1:
        return DensityVerdict(Verdict.DENSE, Certificate.EXACT_SEARCH, rank=r, min_dimension=r)
    cap = r - 1 if cfg.max_dimension is None else min(cfg.max_dimension, r - 1)
    limited = SearchConfig(q=points.q, node_budget=cfg.node_budget, max_dimension=cap)
    result = min_embedding_dimension(distance_matrix(points), points.q, limited)

    if result.status is EmbeddingStatus.BUDGET_EXHAUSTED:
        return DensityVerdict(Verdict.UNKNOWN, Certificate.EXACT_SEARCH, rank=r,
                              nodes_explored=result.nodes_explored)
    if result.status is EmbeddingStatus.INFEASIBLE:
        if cap < r - 1:
            # dimensions above the user cap were never tried
            return DensityVerdict(Verdict.UNKNOWN, Certificate.EXACT_SEARCH, rank=r,
                                  nodes_explored=result.nodes_explored)
        return DensityVerdict(Verdict.DENSE, Certificate.EXACT_SEARCH, rank=r, min_dimension=r,
                              nodes_explored=result.nodes_explored)

    witness = result.realization
    if result.min_dimension >= r or rank(witness) != result.min_dimension:
        raise AssertionError(f"search returned dimension {result.min_dimension} for rank {r}")
    return DensityVerdict(Verdict.NOT_DENSE, Certificate.EXACT_SEARCH, witness=witness, rank=r,
                          min_dimension=result.min_dimension, nodes_explored=result.nodes_explored)


def verify_witness(points: PointSet, witness: PointSet) -> bool:
    """Witness is isometric to the set and strictly smaller in rank"""
    return is_isometric(points, witness) is not None and rank(witness) < rank(points)


def _survey_verdict(points: PointSet, cfg: SearchConfig,
                    class_dimension: Dict[Tuple[int, ...], int]) -> Tuple[Verdict, bool]:
    """Verdict for one surveyed set and whether its isometry class already decided it.

    The least dimension is shared by every isometric image, so once one member
    of a class is settled the rest need only their own rank.
    """
    key = None
    if points.m <= SURVEY_CLASS_MAX_POINTS and not bounds_report(points).density_certified:
        key = canonical_distance_key(distance_matrix(points))
        known = class_dimension.get(key)
        if known is not None:
            return (Verdict.DENSE if rank(points) == known else Verdict.NOT_DENSE), True
    result = is_metrically_dense(points, cfg)
    if key is not None and result.verdict is not Verdict.UNKNOWN:
        class_dimension[key] = result.min_dimension
    return result.verdict, False


def density_survey(q: int, n: int, m: int, cfg: SearchConfig,
                   examples: int = SURVEY_DEFAULT_EXAMPLES) -> SurveyReport:
    """Decide density for every m-subset of E_q^n and tally it against uniformity"""
    params = SpaceParams(q, n)
    if m < 2:
        raise TooFewPointsError("survey needs m >= 2")
    count = comb(params.size, m)
    if count > SURVEY_MAX_SETS:
        raise DomainError(f"{count} subsets exceed the survey limit of {SURVEY_MAX_SETS}")

    words = list(itertools.product(range(q), repeat=n))
    report = SurveyReport(q=q, n=n, m=m)
    class_dimension: Dict[Tuple[int, ...], int] = {}
    for chosen in itertools.combinations(words, m):
        points = PointSet(params, chosen)
        verdict, reused = _survey_verdict(points, cfg, class_dimension)
        report.reused += reused
        uniform = is_uniform_columns(points)
        report.total += 1
        report.uniform += uniform
        if verdict is Verdict.UNKNOWN:
            report.unknown += 1
            continue
        if verdict is Verdict.NOT_DENSE:
            report.not_dense += 1
            if uniform:
                raise AssertionError(f"uniform set judged not dense: {points!r}")
            continue
        report.dense += 1
        if uniform:
            report.uniform_and_dense += 1
        else:
            report.dense_not_uniform += 1
            if len(report.examples) < examples:
                report.examples.append(points)
    report.classes = len(class_dimension)
    logger.info("survey q=%d n=%d m=%d: %d sets, %d dense, %d dense but not uniform",
                q, n, m, report.total, report.dense, report.dense_not_uniform)
    logger.debug("survey reused %d verdicts across %d isometry classes", report.reused, report.classes)
    return report
