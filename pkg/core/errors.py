"""Exception hierarchy for the toolkit"""
from typing import Optional


class HammingError(ValueError):
    """Base class for every error the toolkit raises on bad input"""


class DimensionError(HammingError):
    """Word lengths disagree or a column index is out of range"""


class DomainError(HammingError):
    """A parameter lies outside its documented domain"""


class TooFewPointsError(DomainError):
    """The operation needs at least two points"""


class PointSetError(HammingError):
    """A point set violates its invariants (empty, out-of-range symbol, duplicate row)"""


class ParseError(PointSetError):
    """Malformed point-set text; `line` is 1-based when known"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotAPrimePowerError(DomainError):
    """No finite field of this order exists"""


class RankDeficiencyError(HammingError):
    """Generator rows are linearly dependent"""


class InvalidMatrixError(HammingError):
    """A distance matrix is not a metric on distinct points"""


class FieldZeroDivisionError(HammingError, ZeroDivisionError):
    """Zero has no multiplicative inverse"""
