"""Counting labeled acyclic alpha-multi digraphs.

``A_alpha(n)`` counts digraphs on ``n`` labeled nodes where every ordered pair
carries ``0..alpha-1`` parallel edges and the support has no directed cycle.
Inclusion-exclusion over the set of in-degree-zero nodes gives

    A(n) = sum_{k=1..n} (-1)^(k+1) <n k> A(n-k),   A(0) = 1,

and the same numbers appear, up to sign, as the first column of the inverse
F-nomial matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coefficients import triangle
from .inversion import inverse_corner
from .sequences import _check_alpha, _check_natural

__all__ = ["DagCountTable", "dag_count", "dag_count_via_inverse", "dag_table"]


@lru_cache(maxsize=None)
def _dag_counts(alpha: int, max_n: int) -> tuple[int, ...]:
    fn = triangle(alpha, max_n).rows
    counts = [1]
    for n in range(1, max_n + 1):
        row = fn[n]
        total = 0
        for k in range(1, n + 1):
            term = row[k] * counts[n - k]
            total += term if k % 2 else -term
        counts.append(total)
    return tuple(counts)


def dag_count(alpha: int, n: int) -> int:
    """``A_alpha(n)`` from the inclusion-exclusion recurrence.

    >>> [dag_count(2, n) for n in range(7)]
    [1, 1, 3, 25, 543, 29281, 3781503]
    """
    _check_alpha(alpha)
    _check_natural("n", n)
    return _dag_counts(alpha, n)[n]


def dag_count_via_inverse(alpha: int, n: int) -> int:
    """``A_alpha(n)`` as ``(-1)^n <n 0>^-1``.

    Raises ``ArithmeticError`` if the signed corner is not positive.
    """
    _check_alpha(alpha)
    _check_natural("n", n)
    value = inverse_corner(alpha, n)
    if n % 2:
        value = -value
    if value <= 0:
        raise ArithmeticError(
            f"(-1)^n <n 0>^-1 = {value} is not positive (alpha={alpha}, n={n})"
        )
    return value


@dataclass(frozen=True)
class DagCountTable:
    alpha: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)


def dag_table(alpha: int, max_n: int, verify: bool = True) -> DagCountTable:
    """``A_alpha(0..max_n)``, checked entrywise against the inverse-matrix corner."""
    _check_alpha(alpha)
    _check_natural("max_n", max_n)
    counts = _dag_counts(alpha, max_n)
    if verify:
        for n, c in enumerate(counts):
            if c != dag_count_via_inverse(alpha, n):
                raise ArithmeticError(f"recurrence and inverse corner disagree at n={n}")
    return DagCountTable(alpha, counts)
