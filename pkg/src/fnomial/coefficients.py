"""F-nomial and multi F-nomial coefficients over ``N(alpha)``.

For ``F = N(alpha)`` the F-nomial ``<n k>`` collapses to ``C(n, k) * alpha**(k(n-k))``,
the number of labeled bipartite alpha-multigraphs with a marked side of size
``k``. Three routes compute it and must agree:

* :func:`fnomial` -- the closed form,
* :func:`fnomial_by_definition` -- ratio of F-factorials,
* :func:`fnomial_by_recurrence` -- ``<n k> = alpha**(n-k) <n-1 k-1> + alpha**k <n-1 k>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .compositions import weak_compositions
from .sequences import _check_alpha, _check_natural, f_factorial, falling_f_factorial

__all__ = [
    "ColorComposition",
    "FNomialTriangle",
    "fnomial",
    "fnomial_by_definition",
    "fnomial_by_recurrence",
    "multi_fnomial",
    "multi_fnomial_by_definition",
    "triangle",
    "row_sum",
    "colored_total",
]


def _check_nk(n: int, k: int) -> None:
    _check_natural("n", n)
    _check_natural("k", k)
    if k > n:
        raise ValueError(f"k must not exceed n (k={k}, n={n})")


@dataclass(frozen=True, init=False)
class ColorComposition:
    """Ordered colour-class sizes ``<b_1, ..., b_k>``.

    ``n`` may be passed for a consistency check; it defaults to the sum.
    """

    parts: tuple[int, ...]
    n: int

    def __init__(self, parts: Iterable[int], n: int | None = None) -> None:
        parts = tuple(parts)
        for b in parts:
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"composition parts must be non-negative ints, got {parts!r}")
        total = sum(parts)
        if n is not None and n != total:
            raise ValueError(f"parts {parts!r} sum to {total}, not n={n}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", total)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


CompositionLike = Union[ColorComposition, Sequence[int]]


def _as_composition(comp: CompositionLike) -> ColorComposition:
    return comp if isinstance(comp, ColorComposition) else ColorComposition(comp)


def fnomial(alpha: int, n: int, k: int) -> int:
    """``<n k>`` over ``N(alpha)`` via ``C(n, k) * alpha**(k(n-k))``.

    >>> fnomial(2, 7, 3)
    143360
    """
    _check_alpha(alpha)
    _check_nk(n, k)
    return math.comb(n, k) * alpha ** (k * (n - k))


def fnomial_by_definition(alpha: int, n: int, k: int) -> int:
    """``<n k>`` as ``n_F^(k) / k_F!``; raises if the division is not exact."""
    _check_alpha(alpha)
    _check_nk(n, k)
    q, r = divmod(falling_f_factorial(alpha, n, k), f_factorial(alpha, k))
    if r:
        raise ArithmeticError(f"F-nomial <{n} {k}> is not integral for alpha={alpha}")
    return q


@lru_cache(maxsize=None)
def _recurrence_rows(alpha: int, n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = [1] * (m + 1)
        for k in range(1, m):
            row[k] = alpha ** (m - k) * prev[k - 1] + alpha**k * prev[k]
        rows.append(tuple(row))
    return tuple(rows)


def fnomial_by_recurrence(alpha: int, n: int, k: int) -> int:
    """``<n k>`` built only from the Pascal-like recurrence and ``<n 0> = <n n> = 1``."""
    _check_alpha(alpha)
    _check_nk(n, k)
    return _recurrence_rows(alpha, n)[n][k]


def multi_fnomial(alpha: int, comp: CompositionLike) -> int:
    """Multi F-nomial ``<n | b_1, ..., b_k>`` over ``N(alpha)``.

    Equals the multinomial coefficient times ``alpha**((n^2 - sum b_i^2) / 2)``,
    i.e. the number of labeled alpha-multigraphs coloured with class sizes ``b``.

    >>> multi_fnomial(2, (1, 1, 1))
    48
    """
    _check_alpha(alpha)
    comp = _as_composition(comp)
    n = comp.n
    twice = n * n - sum(b * b for b in comp.parts)
    assert twice >= 0 and twice % 2 == 0, comp
    coef = math.factorial(n)
    for b in comp.parts:
        coef //= math.factorial(b)
    return coef * alpha ** (twice // 2)


def multi_fnomial_by_definition(alpha: int, comp: CompositionLike) -> int:
    """Multi F-nomial as ``n_F! / (b_1_F! ... b_k_F!)``."""
    _check_alpha(alpha)
    comp = _as_composition(comp)
    denom = 1
    for b in comp.parts:
        denom *= f_factorial(alpha, b)
    q, r = divmod(f_factorial(alpha, comp.n), denom)
    if r:
        raise ArithmeticError(f"multi F-nomial {comp.parts} is not integral for alpha={alpha}")
    return q


@dataclass(frozen=True)
class FNomialTriangle:
    """Rows ``0..max_n`` of ``<n k>`` over ``N(alpha)``; ``rows[n][k]`` for ``k <= n``."""

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
        """Square lower-triangular matrix, zero above the diagonal."""
        size = len(self.rows)
        return [list(r) + [0] * (size - len(r)) for r in self.rows]


def triangle(alpha: int, max_n: int, verify: bool = False) -> FNomialTriangle:
    """Build the F-nomial triangle by the recurrence.

    With ``verify=True`` every entry is also checked against the closed form.

    >>> triangle(3, 2).rows
    ((1,), (1, 1), (1, 6, 1))
    """
    _check_alpha(alpha)
    _check_natural("max_n", max_n)
    rows = _recurrence_rows(alpha, max_n)
    if verify:
        for n, row in enumerate(rows):
            for k, v in enumerate(row):
                if v != fnomial(alpha, n, k):
                    raise ArithmeticError(
                        f"recurrence and closed form disagree at <{n} {k}>, alpha={alpha}"
                    )
    return FNomialTriangle(alpha, rows)


def row_sum(alpha: int, n: int) -> int:
    """``sum_k <n k>``: all 2-coloured labeled alpha-multigraphs on ``n`` vertices."""
    _check_alpha(alpha)
    _check_natural("n", n)
    return sum(fnomial(alpha, n, k) for k in range(n + 1))


def colored_total(alpha: int, n: int, k: int) -> int:
    """Sum of multi F-nomials over weak compositions of ``n`` into ``k`` parts.

    Counts labeled ``k``-coloured alpha-multigraphs on ``n`` vertices (colours
    may go unused).
    """
    _check_alpha(alpha)
    _check_natural("n", n)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return sum(multi_fnomial(alpha, c) for c in weak_compositions(n, k))
