"""
Point sets of the Hamming space E_q^n and the small value types built from them
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import DimensionError, DomainError, InvalidMatrixError, PointSetError

Word = Tuple[int, ...]
WordLike = Union[Sequence[int], np.ndarray]


@dataclass(frozen=True)
class SpaceParams:
    """Alphabet size q and word length n of the ambient space E_q^n"""
    q: int
    n: int

    def __post_init__(self):
        if int(self.q) < 2:
            raise DomainError(f"alphabet size q must be >= 2, got {self.q}")
        if int(self.n) < 1:
            raise DomainError(f"word length n must be >= 1, got {self.n}")

    @property
    def size(self) -> int:
        """Number of words in E_q^n"""
        return self.q ** self.n

    def check_word(self, word: WordLike) -> Word:
        """Validate one word against this space and return it as a tuple"""
        symbols = tuple(int(s) for s in word)
        if len(symbols) != self.n:
            raise DimensionError(f"word has length {len(symbols)}, expected {self.n}")
        for s in symbols:
            if not 0 <= s < self.q:
                raise PointSetError(f"symbol {s} outside alphabet [0, {self.q - 1}]")
        return symbols


class PointSet:
    """The matrix M_A: an ordered list of m distinct words, one row per element of A.

    Rows are kept in a read-only int64 array. Row order matters only for
    isometry witnesses and file round-trips.
    """

    def __init__(self, params: SpaceParams, rows: Iterable[WordLike]):
        self.params = params
        words = [params.check_word(row) for row in rows]
        if not words:
            raise PointSetError("no points")
        seen = {}
        for i, word in enumerate(words):
            if word in seen:
                raise PointSetError(f"duplicate row {i} (same as row {seen[word]})")
            seen[word] = i
        matrix = np.array(words, dtype=np.int64).reshape(len(words), params.n)
        matrix.setflags(write=False)
        self._rows = matrix
        self._words: Tuple[Word, ...] = tuple(words)

    @classmethod
    def from_words(cls, words: Sequence[WordLike], q: int, n: Optional[int] = None) -> "PointSet":
        """Build a point set, inferring n from the first word when not given"""
        if n is None:
            if len(words) == 0:
                raise PointSetError("no points")
            n = len(words[0])
        return cls(SpaceParams(q, n), words)

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def m(self) -> int:
        return self._rows.shape[0]

    @property
    def rows(self) -> np.ndarray:
        """Read-only m x n matrix"""
        return self._rows

    @property
    def words(self) -> Tuple[Word, ...]:
        return self._words

    def column(self, j: int) -> np.ndarray:
        if not 0 <= j < self.n:
            raise DimensionError(f"column {j} out of range [0, {self.n - 1}]")
        return self._rows[:, j]

    def reorder(self, order: Sequence[int]) -> "PointSet":
        """Same set with rows permuted: new row i is old row order[i]"""
        if sorted(order) != list(range(self.m)):
            raise DimensionError(f"{list(order)} is not a permutation of {self.m} rows")
        return PointSet(self.params, [self._words[i] for i in order])

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[Word]:
        return iter(self._words)

    def __getitem__(self, i: int) -> Word:
        return self._words[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.params == other.params and self._words == other._words

    def __hash__(self) -> int:
        return hash((self.params, self._words))

    def __repr__(self) -> str:
        return f"PointSet(q={self.q}, n={self.n}, rows={[list(w) for w in self._words]})"


class DistanceMatrix:
    """Symmetric m x m matrix of pairwise Hamming distances"""

    def __init__(self, entries: Union[Sequence[Sequence[int]], np.ndarray]):
        grid = np.array(entries, dtype=np.int64)
        if grid.ndim != 2 or grid.shape[0] != grid.shape[1] or grid.shape[0] == 0:
            raise InvalidMatrixError(f"distance matrix must be square and non-empty, got shape {grid.shape}")
        grid.setflags(write=False)
        self._entries = grid

    @property
    def m(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def max_entry(self) -> int:
        return int(self._entries.max())

    def total(self) -> int:
        """Sum over unordered pairs"""
        return int(np.triu(self._entries, k=1).sum())

    def as_lists(self) -> List[List[int]]:
        return self._entries.tolist()

    def check_metric(self) -> None:
        """Raise InvalidMatrixError unless this is a metric on m distinct points"""
        d = self._entries
        if np.any(d < 0):
            raise InvalidMatrixError("negative distance")
        if np.any(np.diag(d) != 0):
            raise InvalidMatrixError("non-zero diagonal")
        if not np.array_equal(d, d.T):
            raise InvalidMatrixError("matrix is not symmetric")
        off = ~np.eye(self.m, dtype=bool)
        if np.any(d[off] == 0):
            raise InvalidMatrixError("zero distance between distinct points")
        for k in range(self.m):
            if np.any(d > d[:, k, None] + d[None, k, :]):
                raise InvalidMatrixError("triangle inequality violated")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self) -> int:
        return hash(self._entries.tobytes())

    def __repr__(self) -> str:
        return f"DistanceMatrix({self.as_lists()})"


@dataclass(frozen=True)
class ColumnHistogram:
    """Counts y_0..y_{q-1} of each symbol in one column"""
    counts: Tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(self.counts)

    @property
    def q(self) -> int:
        return len(self.counts)

    @property
    def positive(self) -> int:
        """Number of symbols that occur at least once"""
        return sum(1 for c in self.counts if c > 0)

    @property
    def is_constant(self) -> bool:
        return self.positive <= 1


@dataclass(frozen=True)
class IsometryWitness:
    """Row i of the first set corresponds to row mapping[i] of the second"""
    mapping: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.mapping[i]

    def __len__(self) -> int:
        return len(self.mapping)


@dataclass(frozen=True)
class Face:
    """A face of E_q^n: free columns range over E_q, the others are pinned"""
    free_columns: Tuple[int, ...]
    fixed: Tuple[Tuple[int, int], ...]

    @property
    def dimension(self) -> int:
        return len(self.free_columns)

    def contains(self, word: WordLike) -> bool:
        return all(int(word[j]) == s for j, s in self.fixed)
