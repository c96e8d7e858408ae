"""Inverse of the lower-triangular F-nomial matrix over ``N(alpha)``.

The first column of the inverse is a signed sum over strict compositions::

    <n 0>^-1 = sum_{s=1..n} (-1)^s sum_{k_1+...+k_s=n, k_i>=1} <n | k_1, ..., k_s>

and the remaining entries follow from ``<n k>^-1 = <n k> <n-k 0>^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coefficients import fnomial, multi_fnomial, triangle
from .compositions import strict_compositions
from .sequences import _check_alpha, _check_natural

__all__ = [
    "InverseTriangle",
    "inverse_corner",
    "inverse_corner_enumerated",
    "inverse_corner_by_solve",
    "inverse_entry",
    "inverse_triangle",
    "lower_triangular_product",
]


@lru_cache(maxsize=None)
def _layered_corner(alpha: int, n: int) -> int:
    # layer[m] = sum over strict compositions of m into s parts of <m | parts>,
    # advanced one part at a time by splitting off the first part b.
    if n == 0:
        return 1
    fn = triangle(alpha, n).rows
    layer = [0] * (n + 1)
    layer[0] = 1
    total = 0
    for s in range(1, n + 1):
        nxt = [0] * (n + 1)
        for m in range(s, n + 1):
            nxt[m] = sum(fn[m][b] * layer[m - b] for b in range(1, m - s + 2))
        layer = nxt
        total += -layer[n] if s % 2 else layer[n]
    return total


def inverse_corner(alpha: int, n: int) -> int:
    """``<n 0>^-1``, the first-column entry of the inverse F-nomial matrix.

    The composition sum is grouped by number of parts, so the cost is
    polynomial in ``n``; :func:`inverse_corner_enumerated` walks every
    composition instead.

    >>> [inverse_corner(2, n) for n in range(5)]
    [1, -1, 3, -25, 543]
    """
    _check_alpha(alpha)
    _check_natural("n", n)
    return _layered_corner(alpha, n)


def inverse_corner_enumerated(alpha: int, n: int) -> int:
    """``<n 0>^-1`` by visiting all ``2**(n-1)`` strict compositions of ``n``."""
    _check_alpha(alpha)
    _check_natural("n", n)
    if n == 0:
        return 1
    total = 0
    for comp in strict_compositions(n):
        term = multi_fnomial(alpha, comp)
        total += -term if len(comp) % 2 else term
    return total


def inverse_corner_by_solve(alpha: int, n: int) -> int:
    """``<n 0>^-1`` by forward substitution on ``M x = e_0`` in exact integers."""
    _check_alpha(alpha)
    _check_natural("n", n)
    rows = triangle(alpha, n).rows
    x: list[int] = []
    for i in range(n + 1):
        rhs = (1 if i == 0 else 0) - sum(rows[i][j] * x[j] for j in range(i))
        q, r = divmod(rhs, rows[i][i])
        assert r == 0, (alpha, i)
        x.append(q)
    return x[n]


def inverse_entry(alpha: int, n: int, k: int) -> int:
    """``<n k>^-1 = <n k> * <n-k 0>^-1``.

    >>> inverse_entry(2, 6, 2)
    2085120
    """
    return fnomial(alpha, n, k) * inverse_corner(alpha, n - k)


@dataclass(frozen=True)
class InverseTriangle:
    """Signed lower-triangular inverse of :class:`~fnomial.coefficients.FNomialTriangle`."""

    alpha: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.rows[n][k]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def matrix(self) -> list[list[int]]:
        size = len(self.rows)
        return [list(r) + [0] * (size - len(r)) for r in self.rows]


def inverse_triangle(alpha: int, max_n: int) -> InverseTriangle:
    """Rows ``0..max_n`` of the inverse F-nomial matrix.

    >>> inverse_triangle(3, 2).rows
    ((1,), (-1, 1), (5, -6, 1))
    """
    _check_alpha(alpha)
    _check_natural("max_n", max_n)
    corners = [inverse_corner(alpha, m) for m in range(max_n + 1)]
    rows = tuple(
        tuple(fnomial(alpha, n, k) * corners[n - k] for k in range(n + 1))
        for n in range(max_n + 1)
    )
    return InverseTriangle(alpha, rows)


def lower_triangular_product(a, b) -> list[list[int]]:
    """Product of two lower-triangular matrices given as row lists (ragged or square)."""
    size = len(a)
    if len(b) != size:
        raise ValueError("matrices must have the same size")
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        ai = a[i]
        for k in range(i + 1):
            out[i][k] = sum(ai[j] * b[j][k] for j in range(k, i + 1))
    return out
