"""
Exact rank bounds from the distance sum, and the per-column extremes behind them.

All values are Fractions; tightness is decided by exact integer comparison.
"""
import logging
from fractions import Fraction

from core.errors import DomainError, TooFewPointsError
from core.hamming import distance_sum, rank
from entities.point_set import PointSet
from entities.reports import BoundsReport, LowerBoundCase

logger = logging.getLogger(__name__)


def _check_m(m: int) -> None:
    if m < 2:
        raise TooFewPointsError(f"bounds need m >= 2 points, got {m}")


def _check_q(q: int) -> None:
    if q < 2:
        raise DomainError(f"alphabet size q must be >= 2, got {q}")


def lower_bound_case(m: int, q: int) -> LowerBoundCase:
    # m == q belongs to the first case
    return LowerBoundCase.AT_LEAST_Q if m >= q else LowerBoundCase.BELOW_Q


def _small_m_numerator(m: int, q: int) -> int:
    """(m^2 - 2)(q - 2) - (m - 2)^2, positive whenever 2 <= m < q"""
    value = (m * m - 2) * (q - 2) - (m - 2) ** 2
    if value <= 0:
        raise DomainError(f"degenerate bound denominator {value} for m={m}, q={q}")
    return value


def rank_upper_bound(distance_total: int, m: int) -> Fraction:
    """D / (m - 1): every non-constant column separates at least m - 1 pairs"""
    _check_m(m)
    if distance_total < 0:
        raise DomainError(f"distance sum must be >= 0, got {distance_total}")
    return Fraction(distance_total, m - 1)


def rank_lower_bound(distance_total: int, m: int, q: int) -> Fraction:
    _check_m(m)
    _check_q(q)
    if distance_total < 0:
        raise DomainError(f"distance sum must be >= 0, got {distance_total}")
    if lower_bound_case(m, q) is LowerBoundCase.AT_LEAST_Q:
        return Fraction(2 * q * distance_total, (q - 1) * m * m)
    return Fraction(2 * (q - 2) * distance_total, _small_m_numerator(m, q))


def min_column_contribution(m: int) -> int:
    """Least number of differing pairs in a non-constant column: histogram (m-1, 1)"""
    _check_m(m)
    return m - 1


def max_column_contribution(m: int, q: int) -> Fraction:
    """Real-relaxation maximum of differing pairs in one column.

    Integer histograms reach it only when the symbols can split evenly;
    for m=3, q=2 the bound is 9/4 while (2, 1) gives 2.
    """
    _check_m(m)
    _check_q(q)
    if lower_bound_case(m, q) is LowerBoundCase.AT_LEAST_Q:
        return uniform_contribution(m, q)
    return Fraction(_small_m_numerator(m, q), 2 * (q - 2))


def uniform_contribution(m: int, q: int) -> Fraction:
    """(q - 1) m^2 / (2q), the contribution of a column using every symbol m/q times"""
    _check_q(q)
    return Fraction((q - 1) * m * m, 2 * q)


def _ceil(value: Fraction) -> int:
    return -((-value.numerator) // value.denominator)


def _floor(value: Fraction) -> int:
    return value.numerator // value.denominator


def bounds_report(points: PointSet) -> BoundsReport:
    """Rank, D_A and both bounds, with tightness and the density certificate.

    The lower bound depends only on (D, m, q), which every isometric image
    shares, and ranks are integers; a rank equal to its ceiling is therefore
    minimal over all isometric images.
    """
    m, q = points.m, points.q
    _check_m(m)
    total = distance_sum(points)
    r = rank(points)
    lower = rank_lower_bound(total, m, q)
    upper = rank_upper_bound(total, m)
    if not lower <= r <= upper:
        raise AssertionError(f"rank {r} escapes bounds [{lower}, {upper}] for {points!r}")

    lower_tight = r == _ceil(lower)
    report = BoundsReport(
        m=m,
        q=q,
        distance_sum=total,
        rank=r,
        lower=lower,
        upper=upper,
        lower_case=lower_bound_case(m, q),
        lower_tight=lower_tight,
        upper_tight=r == _floor(upper),
        density_certified=lower_tight,
    )
    logger.debug("bounds m=%d q=%d D=%d rank=%d lower=%s upper=%s", m, q, total, r, lower, upper)
    return report
