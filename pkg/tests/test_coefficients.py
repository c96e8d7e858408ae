import math

import pytest
from hypothesis import given, strategies as st

from fnomial.coefficients import (
    ColorComposition,
    colored_total,
    fnomial,
    fnomial_by_definition,
    fnomial_by_recurrence,
    multi_fnomial,
    multi_fnomial_by_definition,
    row_sum,
    triangle,
)
from fnomial.compositions import weak_compositions

from conftest import read_bfile

nk = st.integers(0, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n)))


def test_fnomial_examples():
    assert fnomial(2, 4, 2) == 96
    assert fnomial(2, 7, 3) == 143360
    assert fnomial(2, 5, 0) == 1
    assert fnomial(3, 3, 1) == 27
    # factorial route: 3_F / 1_F for N(3)
    assert fnomial_by_definition(3, 3, 1) == 27


def test_recurrence_examples():
    assert fnomial_by_recurrence(2, 4, 2) == 2**2 * 12 + 2**2 * 12 == 96
    assert fnomial_by_recurrence(2, 6, 3) == 10240
    assert fnomial_by_recurrence(1, 5, 2) == 10


@pytest.mark.parametrize("f", [fnomial, fnomial_by_definition, fnomial_by_recurrence])
def test_rejects_k_above_n(f):
    with pytest.raises(ValueError):
        f(2, 3, 4)
    with pytest.raises(ValueError):
        f(0, 3, 1)


@pytest.mark.parametrize("alpha", range(1, 5))
def test_triple_route(alpha):
    for n in range(31):
        for k in range(n + 1):
            c = fnomial(alpha, n, k)
            assert c == fnomial_by_definition(alpha, n, k) == fnomial_by_recurrence(alpha, n, k)


@given(st.integers(1, 6), nk)
def test_symmetry_and_positivity(alpha, nk):
    n, k = nk
    assert fnomial(alpha, n, k) == fnomial(alpha, n, n - k) > 0


def test_triangle_fixture(triangle_alpha2):
    t = triangle(2, 7, verify=True)
    assert t.as_lists() == triangle_alpha2
    assert t[7, 3] == 143360
    assert t.max_n == 7
    assert t.matrix()[2] == [1, 4, 1, 0, 0, 0, 0, 0]


def test_triangle_small_cases():
    assert triangle(1, 4).as_lists() == [[math.comb(n, k) for k in range(n + 1)] for n in range(5)]
    assert triangle(3, 2).as_lists() == [[1], [1, 1], [1, 6, 1]]


def test_row_sums_match_bfile():
    expected = read_bfile("b047863.txt")
    assert [row_sum(2, n) for n in range(len(expected))] == expected
    assert row_sum(1, 5) == 32


def test_multi_fnomial_examples():
    assert multi_fnomial(2, (1, 1, 1)) == 48 == multi_fnomial_by_definition(2, (1, 1, 1))
    assert multi_fnomial(2, ColorComposition((2, 1))) == 12 == fnomial(2, 3, 1)
    assert multi_fnomial(2, (6,)) == 1
    assert multi_fnomial(2, (0, 2)) == 1


def test_color_composition_validation():
    assert ColorComposition([1, 2, 0]).n == 3
    assert ColorComposition([1, 2], n=3).parts == (1, 2)
    with pytest.raises(ValueError):
        ColorComposition([1, 2], n=4)
    with pytest.raises(ValueError):
        ColorComposition([1, -1])


@given(st.integers(1, 5), st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_multi_fnomial_routes_agree(alpha, parts):
    assert multi_fnomial(alpha, parts) == multi_fnomial_by_definition(alpha, parts)


@given(st.integers(1, 5), nk)
def test_two_part_reduces_to_single(alpha, nk):
    n, k = nk
    assert multi_fnomial(alpha, (k, n - k)) == fnomial(alpha, n, k)


@pytest.mark.parametrize("alpha", range(1, 5))
def test_integrality(alpha):
    from fnomial.sequences import f_factorial, falling_f_factorial

    for n in range(25):
        for k in range(n + 1):
            assert falling_f_factorial(alpha, n, k) % f_factorial(alpha, k) == 0


def test_colored_total_examples():
    assert colored_total(2, 2, 2) == 6
    # 3 * <2|2,0,0> + 3 * <2|1,1,0>
    assert colored_total(2, 2, 3) == 3 * 1 + 3 * 4 == 15
    assert colored_total(1, 3, 2) == 8
    with pytest.raises(ValueError):
        colored_total(2, 2, 0)


@pytest.mark.parametrize("alpha", range(1, 5))
def test_colored_total_two_colours_is_row_sum(alpha):
    for n in range(12):
        assert colored_total(alpha, n, 2) == row_sum(alpha, n)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("k", range(1, 4))
def test_colored_total_alpha1_counts_colourings(n, k):
    assert colored_total(1, n, k) == k**n


def test_colored_total_alpha2_by_pair_sum():
    # independent: sum over colour vectors of 2^(differently coloured pairs)
    import itertools

    for n in range(5):
        for k in range(1, 4):
            direct = sum(
                2 ** sum(c[u] != c[v] for u, v in itertools.combinations(range(n), 2))
                for c in itertools.product(range(k), repeat=n)
            )
            assert colored_total(2, n, k) == direct
