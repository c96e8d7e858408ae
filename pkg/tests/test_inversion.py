import pytest
from hypothesis import given, settings, strategies as st

from fnomial.coefficients import fnomial, triangle
from fnomial.inversion import (
    inverse_corner,
    inverse_corner_by_solve,
    inverse_corner_enumerated,
    inverse_entry,
    inverse_triangle,
    lower_triangular_product,
)


def test_corner_examples():
    assert inverse_corner(2, 2) == 3
    assert inverse_corner(2, 5) == -29281
    assert inverse_corner(2, 0) == 1
    # all four strict compositions of 3
    assert inverse_corner(2, 3) == -1 + (12 + 12) - 48 == -25


def test_entry_examples():
    assert inverse_entry(2, 2, 1) == 4 * -1 == -4
    assert inverse_entry(2, 6, 2) == 2085120
    assert inverse_entry(2, 5, 5) == 1
    with pytest.raises(ValueError):
        inverse_entry(2, 2, 3)


def test_inverse_fixture(inverse_alpha2):
    inv = inverse_triangle(2, 6)
    assert inv.as_lists() == inverse_alpha2
    assert inv[6, 1] == -5621952
    assert inv.max_n == 6


def test_inverse_small_cases():
    assert inverse_triangle(1, 3).as_lists() == [[1], [-1, 1], [1, -2, 1], [-1, 3, -3, 1]]
    assert inverse_triangle(3, 2).as_lists() == [[1], [-1, 1], [5, -6, 1]]


@pytest.mark.parametrize("alpha", range(1, 5))
def test_corner_three_routes(alpha):
    for n in range(13):
        c = inverse_corner(alpha, n)
        assert c == inverse_corner_enumerated(alpha, n) == inverse_corner_by_solve(alpha, n)


@pytest.mark.parametrize("alpha", range(1, 5))
def test_corner_solve_route_large_n(alpha):
    for n in range(13, 21):
        assert inverse_corner(alpha, n) == inverse_corner_by_solve(alpha, n)


@pytest.mark.parametrize("alpha", range(1, 5))
def test_product_is_identity(alpha):
    m = triangle(alpha, 20).matrix()
    inv = inverse_triangle(alpha, 20).matrix()
    prod = lower_triangular_product(m, inv)
    assert prod == [[int(i == k) for k in range(21)] for i in range(21)]
    # left inverse as well
    assert lower_triangular_product(inv, m) == prod


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(0, 14))
def test_inverse_structure(alpha, n):
    inv = inverse_triangle(alpha, n)
    assert all(inv[i, i] == 1 for i in range(n + 1))
    assert all((inv[i, 0] > 0) == (i % 2 == 0) for i in range(n + 1))
    assert all(inv[i, k] == fnomial(alpha, i, k) * inv[i - k, 0] for i in range(n + 1) for k in range(i + 1))


def test_product_size_mismatch():
    with pytest.raises(ValueError):
        lower_triangular_product([[1]], [[1], [0, 1]])
