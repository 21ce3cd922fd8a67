import math

import pytest
from hypothesis import given, strategies as st

from pathpairs import (
    DomainError,
    EpsilonSplit,
    RangeError,
    SplitError,
    StrictQuery,
    binomial,
    raney_coefficient,
    strict_count_formula,
    strict_count_general,
)
from pathpairs.exact_math import canonical_split, strict_count
from pathpairs.verify import legal_splits

import bruteforce


@pytest.mark.parametrize("a, b, expected", [(5, 2, 10), (4, 7, 0), (11, 2, 55), (3, -1, 0), (-2, 1, 0), (0, 0, 1)])
def test_binomial(a, b, expected):
    assert binomial(a, b) == expected


@pytest.mark.parametrize(
    "k, r, n, expected",
    [
        (2, 1, 4, 14),  # C_4
        (3, 3, 1, 3),  # k=3 eps=0 triangle, entry (1, 0)
        (2, 2, 2, 5),  # Catalan triangle, entry (2, 0)
        (5, 7, 0, 1),
    ],
)
def test_raney_values(k, r, n, expected):
    assert raney_coefficient(k, r, n) == expected


def test_raney_matches_definition_by_convolution():
    # [t^n] C_k^r from explicit Fuss-Catalan numbers (1/(kn+1)) C(kn+1, n) and repeated convolution
    N = 10
    for k in (2, 3, 4):
        fc = [math.comb(k * i + 1, i) // (k * i + 1) for i in range(N + 1)]
        power = [1] + [0] * N
        for r in range(1, 7):
            power = [sum(power[j] * fc[i - j] for j in range(i + 1)) for i in range(N + 1)]
            assert [raney_coefficient(k, r, i) for i in range(N + 1)] == power


@pytest.mark.parametrize("args", [(1, 1, 1), (2, 0, 1), (2, 1, -1)])
def test_raney_domain(args):
    with pytest.raises(DomainError):
        raney_coefficient(*args)


@pytest.mark.parametrize(
    "k, n, delta, eps, expected",
    [(2, 5, 2, 0, 48), (3, 4, 2, 1, 25), (4, 5, 1, 2, 340)],
)
def test_strict_formula_figure_values(k, n, delta, eps, expected):
    assert strict_count_formula(StrictQuery(k, n, delta, eps)) == expected


@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_maximal_distance_is_unique(k, n):
    for eps in range(k):
        assert strict_count_formula(StrictQuery(k, n, n, eps)) == 1


def test_strict_formula_out_of_domain_and_range():
    assert strict_count_formula(StrictQuery(2, 3, 4, 0)) == 0
    assert strict_count_formula(StrictQuery(2, 3, 0, 0)) == 0
    assert strict_count_formula(StrictQuery(2, 3, 1, 9)) == 0
    with pytest.raises(RangeError):
        strict_count_formula(StrictQuery(2, 3, 1, 2))


@pytest.mark.parametrize(
    "fields", [(1, 3, 1, 0), (2, 0, 1, 0), (2, 3, -1, 0), (2, 3, 1, -1)]
)
def test_query_rejects_nonsense(fields):
    with pytest.raises(DomainError):
        StrictQuery(*fields)


@pytest.mark.parametrize(
    "query, split, expected",
    [
        ((2, 3, 1, 2), "canonical", 1),  # (N, ENN)
        ((2, 3, 2, 2), "canonical", 2),  # (N, EEN), (N, ENE)
        ((3, 3, 2, 2), EpsilonSplit(1, 0), 4),
        ((3, 3, 2, 2), EpsilonSplit(0, 2), 4),
        ((2, 2, 1, 2), "canonical", 1),  # empty upper path, lower EN
    ],
)
def test_strict_general_examples(query, split, expected):
    assert strict_count_general(StrictQuery(*query), split) == expected
    assert bruteforce.strict_count(*query) == expected


def test_canonical_split_fallback_at_full_gap():
    assert canonical_split(StrictQuery(2, 2, 1, 2)) == EpsilonSplit(1, 1)
    assert canonical_split(StrictQuery(3, 4, 2, 8)) == EpsilonSplit(3, 2)
    assert canonical_split(StrictQuery(3, 4, 2, 7)) == EpsilonSplit(3, 1)
    # the literal split with epsilon1 = n is refused
    with pytest.raises(SplitError):
        strict_count_general(StrictQuery(2, 2, 1, 2), EpsilonSplit(2, 0))


def test_split_errors():
    q = StrictQuery(3, 4, 2, 5)
    with pytest.raises(SplitError):
        strict_count_general(q, EpsilonSplit(1, 1))
    with pytest.raises(SplitError):
        EpsilonSplit(-1, 7)
    with pytest.raises(SplitError):
        strict_count_general(q, "balanced")


def test_general_matches_bruteforce_small():
    for k, top in ((2, 5), (3, 3), (4, 3)):
        for n in range(1, top + 1):
            for eps in range((k - 1) * n + 1):
                for delta in range(1, n + 1):
                    expected = bruteforce.strict_count(k, n, delta, eps)
                    assert strict_count_general(StrictQuery(k, n, delta, eps)) == expected


queries = st.integers(2, 5).flatmap(
    lambda k: st.integers(1, 9).flatmap(
        lambda n: st.tuples(
            st.just(k), st.just(n), st.integers(1, n), st.integers(0, (k - 1) * n)
        )
    )
)


@given(queries)
def test_split_invariance(fields):
    q = StrictQuery(*fields)
    values = {strict_count_general(q, s) for s in legal_splits(q)}
    assert values == {strict_count_general(q)}


@given(queries)
def test_range_agreement(fields):
    q = StrictQuery(*fields)
    if q.epsilon <= (q.k - 1) * q.delta:
        assert strict_count_general(q) == strict_count_formula(q) == strict_count(q)


@given(queries)
def test_exact_division(fields):
    k, n, delta, eps = fields
    if eps <= (k - 1) * delta:
        assert (k * delta - eps) * math.comb(k * n - eps, n - delta) % (k * n - eps) == 0
