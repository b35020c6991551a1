"""Prime-power finite fields, generator matrices and the linear subspaces they span.

Field elements are the integers 0..q-1, read as base-p digit vectors: digit i
is the coefficient of x^i. Words of E_q^n are therefore also vectors over
GF(q) without any conversion.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from config.constants import SUBSPACE_MAX_RETRIES
from core.errors import (
    DomainError,
    FieldZeroDivisionError,
    NotAPrimePowerError,
    PointSetError,
    RankDeficiencyError,
)
from core.hamming import column_histograms
from entities.point_set import ColumnHistogram, PointSet, SpaceParams, Word, WordLike

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]  # coefficients, lowest degree first


# ------------------------------------------------------------------
# Polynomials over GF(p)
# ------------------------------------------------------------------
def _trim(poly: List[int]) -> List[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(dividend: Sequence[int], divisor: Sequence[int], p: int) -> List[int]:
    """Remainder of dividend / divisor over GF(p); divisor must be monic"""
    rem = _trim([c % p for c in dividend])
    d = len(divisor) - 1
    while len(rem) - 1 >= d and rem:
        shift = len(rem) - 1 - d
        lead = rem[-1]
        for i, c in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def _monic_polys(degree: int, p: int) -> Iterator[Poly]:
    """Monic polynomials of a degree, lowest coefficients compared first"""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2"""
    degree = len(poly) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise NotAPrimePowerError(f"field order must be >= 2, got {q}")
    p = next(d for d in itertools.count(2) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotAPrimePowerError(f"{q} is not a prime power")
    return p, e


# ------------------------------------------------------------------
# Fields
# ------------------------------------------------------------------
@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) with a fixed monic irreducible modulus of degree e"""
    p: int
    e: int
    modulus: Poly

    @property
    def q(self) -> int:
        return self.p ** self.e

    def digits(self, a: int) -> List[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for c in reversed(list(digits)):
            value = value * self.p + c % self.p
        return value

    def check(self, a: int) -> int:
        if not 0 <= int(a) < self.q:
            raise DomainError(f"{a} is not an element of GF({self.q})")
        return int(a)

    @cached_property
    def add_table(self) -> np.ndarray:
        elems = range(self.q)
        return np.array([[field_add(a, b, self) for b in elems] for a in elems], dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        elems = range(self.q)
        return np.array([[field_mul(a, b, self) for b in elems] for a in elems], dtype=np.int64)

    def __str__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.q}) mod {format_poly(self.modulus)}"


def format_poly(poly: Sequence[int]) -> str:
    """Human-readable form, highest degree first: (1, 1, 1) -> x^2 + x + 1"""
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if not c:
            continue
        power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not power:
            terms.append(str(c))
        else:
            terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """GF(q) built on the lexicographically least monic irreducible of degree e"""
    p, e = _prime_power(q)
    modulus = next(poly for poly in _monic_polys(e, p) if is_irreducible(poly, p))
    spec = FieldSpec(p=p, e=e, modulus=modulus)
    logger.debug("built %s (modulus coefficients %s)", spec, modulus)
    return spec


def field_add(a: int, b: int, f: FieldSpec) -> int:
    a, b = f.check(a), f.check(b)
    if f.e == 1:
        return (a + b) % f.p
    return f.from_digits([x + y for x, y in zip(f.digits(a), f.digits(b))])


def field_neg(a: int, f: FieldSpec) -> int:
    a = f.check(a)
    return f.from_digits([-x for x in f.digits(a)])


def field_sub(a: int, b: int, f: FieldSpec) -> int:
    return field_add(a, field_neg(b, f), f)


def field_mul(a: int, b: int, f: FieldSpec) -> int:
    a, b = f.check(a), f.check(b)
    if f.e == 1:
        return (a * b) % f.p
    da, db = f.digits(a), f.digits(b)
    product = [0] * (2 * f.e - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                product[i + j] += x * y
    return f.from_digits(_poly_mod(product, f.modulus, f.p))


def field_inv(a: int, f: FieldSpec) -> int:
    a = f.check(a)
    if a == 0:
        raise FieldZeroDivisionError(f"0 has no inverse in GF({f.q})")
    if f.e == 1:
        return pow(a, f.p - 2, f.p)
    # a^(q-2) by square-and-multiply
    result, base, k = 1, a, f.q - 2
    while k:
        if k & 1:
            result = field_mul(result, base, f)
        base = field_mul(base, base, f)
        k >>= 1
    return result


def field_div(a: int, b: int, f: FieldSpec) -> int:
    return field_mul(a, field_inv(b, f), f)


# ------------------------------------------------------------------
# Linear algebra over GF(q)
# ------------------------------------------------------------------
def matrix_rank(rows: Sequence[WordLike], f: FieldSpec) -> int:
    """Rank over GF(q) by Gaussian elimination"""
    work = [[f.check(s) for s in row] for row in rows]
    if not work:
        return 0
    n = len(work[0])
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field_inv(work[rank][col], f)
        work[rank] = [field_mul(inv, s, f) for s in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                factor = work[i][col]
                work[i] = [field_sub(s, field_mul(factor, t, f), f) for s, t in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class GeneratorMatrix:
    """k linearly independent rows over GF(q), 1 <= k <= n"""
    field: FieldSpec
    rows: Tuple[Word, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(s) for s in r) for r in self.rows)
        if not rows:
            raise DomainError("generator matrix needs at least one row")
        params = SpaceParams(self.field.q, len(rows[0]))
        rows = tuple(params.check_word(r) for r in rows)
        object.__setattr__(self, "rows", rows)
        if self.k > self.n:
            raise DomainError(f"{self.k} generator rows exceed word length {self.n}")
        found = matrix_rank(rows, self.field)
        if found != self.k:
            raise RankDeficiencyError(f"generator rows have rank {found}, expected {self.k}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def params(self) -> SpaceParams:
        return SpaceParams(self.field.q, self.n)


def span(generators: GeneratorMatrix) -> PointSet:
    """All q^k combinations sum c_i row_i, coefficient vectors in lexicographic order"""
    f = generators.field
    coeffs = np.array(list(itertools.product(range(f.q), repeat=generators.k)), dtype=np.int64)
    basis = np.array(generators.rows, dtype=np.int64)
    add, mul = f.add_table, f.mul_table
    acc = np.zeros((coeffs.shape[0], generators.n), dtype=np.int64)
    for i in range(generators.k):
        term = mul[coeffs[:, i][:, None], basis[i][None, :]]
        acc = add[acc, term]
    return PointSet(generators.params, acc)


@dataclass(frozen=True)
class ColumnUniformity:
    column: int
    histogram: ColumnHistogram
    constant: bool
    uniform: bool


def column_uniformity(points: PointSet) -> List[ColumnUniformity]:
    """Per-column detail for the uniform-distribution test; constant columns count as uniform"""
    share, remainder = divmod(points.m, points.q)
    detail = []
    for j, hist in enumerate(column_histograms(points)):
        constant = hist.is_constant
        uniform = constant or (remainder == 0 and all(c == share for c in hist.counts))
        detail.append(ColumnUniformity(column=j, histogram=hist, constant=constant, uniform=uniform))
    return detail


def is_uniform_columns(points: PointSet) -> bool:
    """q divides m and every non-constant column uses each symbol exactly m/q times"""
    if points.m % points.q:
        return False
    return all(c.uniform for c in column_uniformity(points))


def random_subspace(n: int, k: int, f: FieldSpec, seed: int) -> GeneratorMatrix:
    """Seeded random generator matrix; rows are redrawn until independent"""
    if not 1 <= k <= n:
        raise DomainError(f"subspace dimension k={k} must lie in [1, n={n}]")
    rng = np.random.default_rng(seed)
    rows: List[Word] = []
    retries = 0
    while len(rows) < k:
        candidate = tuple(int(s) for s in rng.integers(0, f.q, size=n))
        if matrix_rank(rows + [candidate], f) == len(rows) + 1:
            rows.append(candidate)
            continue
        retries += 1
        logger.debug("rejected dependent row %s (retry %d)", candidate, retries)
        if retries > SUBSPACE_MAX_RETRIES:
            raise RankDeficiencyError(f"no independent row found after {SUBSPACE_MAX_RETRIES} draws")
    return GeneratorMatrix(f, tuple(rows))


def all_generator_matrices(n: int, k: int, f: FieldSpec) -> Iterator[GeneratorMatrix]:
    """Every ordered k-tuple of independent rows in E_q^n"""
    if not 1 <= k <= n:
        raise DomainError(f"subspace dimension k={k} must lie in [1, n={n}]")
    words = [w for w in itertools.product(range(f.q), repeat=n) if any(w)]

    def extend(rows: List[Word]) -> Iterator[Tuple[Word, ...]]:
        if len(rows) == k:
            yield tuple(rows)
            return
        for w in words:
            if matrix_rank(rows + [w], f) == len(rows) + 1:
                yield from extend(rows + [w])

    for rows in extend([]):
        yield GeneratorMatrix(f, rows)


def generator_from_points(points: PointSet) -> GeneratorMatrix:
    """Read a parsed point-set file as generator rows"""
    try:
        f = make_field(points.q)
    except NotAPrimePowerError as exc:
        raise PointSetError(f"generator file alphabet: {exc}") from exc
    return GeneratorMatrix(f, points.words)
