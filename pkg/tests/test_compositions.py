import itertools

import pytest
from hypothesis import given, strategies as st

from fnomial.compositions import strict_compositions, weak_compositions


def weak_by_filter(n, k):
    return [c for c in itertools.product(range(n + 1), repeat=k) if sum(c) == n]


def strict_by_filter(n):
    return sorted(
        c for s in range(1, n + 1) for c in itertools.product(range(1, n + 1), repeat=s) if sum(c) == n
    )


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("k", range(1, 5))
def test_weak_matches_filtered_product(n, k):
    assert list(weak_compositions(n, k)) == weak_by_filter(n, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_strict_matches_filtered_product(n):
    got = list(strict_compositions(n))
    assert got == strict_by_filter(n)
    assert len(got) == 2 ** (n - 1)


def test_edge_cases():
    assert list(strict_compositions(0)) == [()]
    assert list(weak_compositions(0, 0)) == [()]
    assert list(weak_compositions(3, 0)) == []
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]


@given(st.integers(0, 12), st.integers(1, 5))
def test_weak_count(n, k):
    from math import comb

    assert sum(1 for _ in weak_compositions(n, k)) == comb(n + k - 1, k - 1)
