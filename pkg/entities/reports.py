"""
Report and configuration records produced by the bounds and density analyses
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from core.errors import DomainError
from entities.point_set import PointSet

Rational = Fraction


def rational_to_dict(value: Fraction) -> Dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def points_to_lists(points: Optional[PointSet]) -> Optional[List[List[int]]]:
    if points is None:
        return None
    return [list(w) for w in points.words]


class LowerBoundCase(str, Enum):
    AT_LEAST_Q = "m ≥ q"
    BELOW_Q = "m < q"


@dataclass(frozen=True)
class BoundsReport:
    """Rank, distance sum and both rank bounds of one point set"""
    m: int
    q: int
    distance_sum: int
    rank: int
    lower: Fraction
    upper: Fraction
    lower_case: LowerBoundCase
    lower_tight: bool
    upper_tight: bool
    density_certified: bool

    @property
    def lower_ceiling(self) -> int:
        return -((-self.lower.numerator) // self.lower.denominator)

    @property
    def upper_floor(self) -> int:
        return self.upper.numerator // self.upper.denominator

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "q": self.q,
            "distance_sum": self.distance_sum,
            "rank": self.rank,
            "lower": rational_to_dict(self.lower),
            "upper": rational_to_dict(self.upper),
            "lower_ceiling": self.lower_ceiling,
            "upper_floor": self.upper_floor,
            "lower_case": self.lower_case.value,
            "lower_tight": self.lower_tight,
            "upper_tight": self.upper_tight,
            "density_certified": self.density_certified,
        }


@dataclass(frozen=True)
class SearchConfig:
    """Limits for the exact embedding search"""
    q: int
    node_budget: int
    max_dimension: Optional[int] = None

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"alphabet size q must be >= 2, got {self.q}")
        if self.node_budget < 1:
            raise DomainError(f"node budget must be >= 1, got {self.node_budget}")
        if self.max_dimension is not None and self.max_dimension < 1:
            raise DomainError(f"max dimension must be >= 1, got {self.max_dimension}")


class EmbeddingStatus(str, Enum):
    EXACT = "exact"
    BUDGET_EXHAUSTED = "budget_exhausted"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class RealizationAttempt:
    """Outcome of one fixed-dimension realization search"""
    realization: Optional[PointSet]
    nodes_explored: int
    exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.realization is not None


@dataclass(frozen=True)
class EmbeddingResult:
    status: EmbeddingStatus
    min_dimension: int
    nodes_explored: int
    realization: Optional[PointSet] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "min_dimension": self.min_dimension,
            "nodes_explored": self.nodes_explored,
            "realization": points_to_lists(self.realization),
        }


class Verdict(str, Enum):
    DENSE = "dense"
    NOT_DENSE = "not_dense"
    UNKNOWN = "unknown"


class Certificate(str, Enum):
    BOUND_CERTIFICATE = "bound_certificate"
    EXACT_SEARCH = "exact_search"


@dataclass(frozen=True)
class DensityVerdict:
    verdict: Verdict
    certified_by: Certificate
    witness: Optional[PointSet] = None
    rank: Optional[int] = None
    min_dimension: Optional[int] = None
    nodes_explored: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "certified_by": self.certified_by.value,
            "witness": points_to_lists(self.witness),
            "rank": self.rank,
            "min_dimension": self.min_dimension,
            "nodes_explored": self.nodes_explored,
        }


@dataclass
class SurveyReport:
    """Tallies of density and uniformity over every m-subset of E_q^n"""
    q: int
    n: int
    m: int
    total: int = 0
    dense: int = 0
    not_dense: int = 0
    unknown: int = 0
    uniform: int = 0
    uniform_and_dense: int = 0
    dense_not_uniform: int = 0
    classes: int = 0
    reused: int = 0
    examples: List[PointSet] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "n": self.n,
            "m": self.m,
            "total": self.total,
            "dense": self.dense,
            "not_dense": self.not_dense,
            "unknown": self.unknown,
            "uniform": self.uniform,
            "uniform_and_dense": self.uniform_and_dense,
            "dense_not_uniform": self.dense_not_uniform,
            "classes": self.classes,
            "reused": self.reused,
            "examples": [points_to_lists(s) for s in self.examples],
        }


def histogram_row(index: int, counts: Tuple[int, ...], contribution: int) -> Dict[str, Any]:
    return {"column": index, "histogram": list(counts), "contribution": contribution}
