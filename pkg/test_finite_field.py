"""Tests for GF(q) arithmetic, generator matrices and subspace spans"""
import itertools
from fractions import Fraction

import numpy as np
import pytest

from conftest import SET_A_WORDS
from core.bounds import bounds_report, uniform_contribution
from core.errors import (
    DomainError,
    FieldZeroDivisionError,
    NotAPrimePowerError,
    PointSetError,
    RankDeficiencyError,
)
from core.hamming import column_histograms, distance_sum, rank
from entities.point_set import PointSet
from systems.finite_field import (
    GeneratorMatrix,
    all_generator_matrices,
    column_uniformity,
    field_add,
    field_div,
    field_inv,
    field_mul,
    field_neg,
    field_sub,
    format_poly,
    generator_from_points,
    is_irreducible,
    is_uniform_columns,
    make_field,
    matrix_rank,
    random_subspace,
    span,
)

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


# ------------------------------------------------------------------
# Fields
# ------------------------------------------------------------------
def test_prime_field():
    f = make_field(2)
    assert (f.p, f.e, f.q) == (2, 1, 2)


def test_gf4_modulus():
    f = make_field(4)
    assert (f.p, f.e) == (2, 2)
    assert f.modulus == (1, 1, 1)
    assert format_poly(f.modulus) == "x^2 + x + 1"


@pytest.mark.parametrize("q", [1, 6, 10, 12, 15])
def test_not_a_prime_power(q):
    with pytest.raises(NotAPrimePowerError):
        make_field(q)


def test_field_examples():
    gf4 = make_field(4)
    assert field_mul(2, 2, gf4) == 3
    assert field_inv(2, make_field(5)) == 3
    for q in (2, 4, 9):
        f = make_field(q)
        assert all(field_add(a, 0, f) == a for a in range(q))


def test_inverse_of_zero():
    with pytest.raises(FieldZeroDivisionError):
        field_inv(0, make_field(8))
    with pytest.raises(ZeroDivisionError):
        field_div(1, 0, make_field(3))


def test_element_range_checked():
    with pytest.raises(DomainError):
        field_add(4, 0, make_field(4))


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms(q):
    f = make_field(q)
    assert is_irreducible(f.modulus, f.p)
    add, mul = f.add_table, f.mul_table
    a = np.arange(q)

    # identities and commutativity
    assert np.array_equal(add[:, 0], a)
    assert np.array_equal(mul[:, 1], a)
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)

    # associativity and distributivity over every triple
    x, y, z = np.meshgrid(a, a, a, indexing="ij")
    assert np.array_equal(add[add[x, y], z], add[x, add[y, z]])
    assert np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]])
    assert np.array_equal(mul[x, add[y, z]], add[mul[x, y], mul[x, z]])

    # inverses
    for e in range(q):
        assert field_add(e, field_neg(e, f), f) == 0
        assert field_sub(e, e, f) == 0
        if e:
            assert field_mul(e, field_inv(e, f), f) == 1
            assert field_div(e, e, f) == 1

    # no zero divisors: every non-zero row of the product table is a permutation
    for e in range(1, q):
        assert sorted(mul[e].tolist()) == list(range(q))


@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_extension_tables_match_galois(q):
    galois = pytest.importorskip("galois")
    f = make_field(q)
    GF = galois.GF(q, irreducible_poly=list(reversed(f.modulus)))
    elems = GF(list(range(q)))
    expected_mul = (elems[:, None] * elems[None, :]).view(np.ndarray)
    expected_add = (elems[:, None] + elems[None, :]).view(np.ndarray)
    assert np.array_equal(f.mul_table, expected_mul)
    assert np.array_equal(f.add_table, expected_add)


# ------------------------------------------------------------------
# Generator matrices and spans
# ------------------------------------------------------------------
def test_matrix_rank():
    gf2 = make_field(2)
    assert matrix_rank([(1, 0, 1), (0, 1, 1), (1, 1, 0)], gf2) == 2
    assert matrix_rank([(1, 2), (1, 1)], make_field(3)) == 2
    assert matrix_rank([(1, 2), (2, 4)], make_field(5)) == 1


def test_generator_matrix_validation():
    gf2 = make_field(2)
    with pytest.raises(RankDeficiencyError):
        GeneratorMatrix(gf2, ((1, 1, 0), (1, 1, 0)))
    with pytest.raises(DomainError):
        GeneratorMatrix(gf2, ((1, 0), (0, 1), (1, 1)))
    with pytest.raises(DomainError):
        GeneratorMatrix(gf2, ())


def test_span_is_set_a():
    G = GeneratorMatrix(make_field(2), ((0, 0, 1, 1), (0, 1, 0, 1)))
    assert set(span(G).words) == set(SET_A_WORDS)


def test_span_of_one_row():
    G = GeneratorMatrix(make_field(2), ((0, 1, 1, 1),))
    assert span(G).words == ((0, 0, 0, 0), (0, 1, 1, 1))


def test_span_of_identity_is_the_whole_space():
    G = GeneratorMatrix(make_field(3), ((1, 0), (0, 1)))
    assert set(span(G).words) == set(itertools.product(range(3), repeat=2))


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_span_is_a_linear_subspace(q, k):
    f = make_field(q)
    points = span(random_subspace(4, k, f, seed=5))
    words = set(points.words)
    assert len(words) == q ** k <= 125
    assert (0, 0, 0, 0) in words
    for x, y in itertools.product(points.words, repeat=2):
        assert tuple(field_add(a, b, f) for a, b in zip(x, y)) in words
    for c, x in itertools.product(range(q), points.words):
        assert tuple(field_mul(c, a, f) for a in x) in words


def test_uniform_columns_examples(set_a, set_b):
    assert is_uniform_columns(set_a)
    assert not is_uniform_columns(set_b)
    detail = column_uniformity(set_b)
    assert detail[0].histogram.counts == (3, 1)
    assert not detail[0].uniform


def test_uniformity_needs_divisible_size():
    points = PointSet.from_words([(0, 0), (0, 1), (1, 0)], q=2)
    assert not is_uniform_columns(points)


def test_coset_of_a_subspace_is_uniform():
    f = make_field(3)
    points = span(random_subspace(4, 2, f, seed=1))
    shift = (1, 2, 0, 1)
    coset = PointSet(points.params, [tuple(field_add(a, b, f) for a, b in zip(w, shift)) for w in points])
    assert is_uniform_columns(coset)
    assert rank(coset) == rank(points)


def test_random_subspace_is_deterministic():
    f = make_field(3)
    assert random_subspace(5, 2, f, seed=42) == random_subspace(5, 2, f, seed=42)
    G = random_subspace(5, 2, f, seed=42)
    assert matrix_rank(G.rows, f) == 2


def test_random_full_subspace():
    f = make_field(2)
    G = random_subspace(3, 3, f, seed=0)
    assert span(G).m == 8


def test_random_subspace_domain():
    with pytest.raises(DomainError):
        random_subspace(2, 3, make_field(2), seed=0)


def test_generator_from_points():
    points = PointSet.from_words([(1, 0, 2), (0, 1, 1)], q=3)
    G = generator_from_points(points)
    assert (G.k, G.n) == (2, 3)
    with pytest.raises(PointSetError):
        generator_from_points(PointSet.from_words([(1, 0)], q=6))


def _check_uniform_span(points: PointSet, k: int):
    q, m = points.q, points.m
    assert m == q ** k
    assert is_uniform_columns(points)
    for hist in column_histograms(points):
        if not hist.is_constant:
            assert set(hist.counts) == {q ** (k - 1)}
    report = bounds_report(points)
    assert distance_sum(points) == report.rank * uniform_contribution(m, q)
    assert report.lower == report.rank == Fraction(report.rank)
    assert report.density_certified


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(1, min(n, 2) + 1)])
def test_every_binary_subspace_is_uniform(n, k):
    f = make_field(2)
    count = 0
    for G in all_generator_matrices(n, k, f):
        _check_uniform_span(span(G), k)
        count += 1
    assert count > 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_sampled_subspaces_are_uniform(q):
    f = make_field(q)
    for n in range(1, 6):
        for k in range(1, min(n, 3) + 1):
            for seed in range(3):
                _check_uniform_span(span(random_subspace(n, k, f, seed)), k)
