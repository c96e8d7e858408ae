"""Tiling sequences F(x) = 1_F * x / ((1 - a x)(1 - b x)) and their F-factorials.

Every term is an exact Python ``int``. The one-parameter family ``N(alpha)``
(``a = b = alpha``, ``1_F = 1``) has the closed form ``n_F = n * alpha**(n-1)``
and is what the rest of the package builds on.

>>> [n_alpha(2, n) for n in range(8)]
[0, 1, 4, 12, 32, 80, 192, 448]
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "SequenceParams",
    "FSequence",
    "coefficient",
    "n_alpha",
    "f_factorial",
    "falling_f_factorial",
]


def _check_alpha(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha!r}")


def _check_natural(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class SequenceParams:
    """Parameters ``(1_F, alpha, beta)`` of a sequence in the two-parameter family."""

    one_f: int = 1
    alpha: int = 1
    beta: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.one_f, int) or self.one_f < 1:
            raise ValueError(f"one_f must be a positive integer, got {self.one_f!r}")
        _check_natural("alpha", self.alpha)
        _check_natural("beta", self.beta)

    @classmethod
    def n_alpha(cls, alpha: int) -> "SequenceParams":
        """Parameters of ``N(alpha)``."""
        _check_alpha(alpha)
        return cls(one_f=1, alpha=alpha, beta=alpha)

    @property
    def is_n_alpha(self) -> bool:
        return self.one_f == 1 and self.alpha == self.beta and self.alpha >= 1


@lru_cache(maxsize=None)
def _coefficient(one_f: int, alpha: int, beta: int, n: int) -> int:
    if n == 0:
        return 0
    if alpha == beta:
        return one_f * n * alpha ** (n - 1)
    # complete homogeneous sum h_{n-1}(alpha, beta)
    return one_f * sum(alpha**i * beta ** (n - 1 - i) for i in range(n))


def coefficient(params: SequenceParams, n: int) -> int:
    """Return ``n_F = [x^n] F(x)`` for the sequence described by ``params``.

    >>> coefficient(SequenceParams(1, 1, 2), 3)
    7
    """
    _check_natural("n", n)
    return _coefficient(params.one_f, params.alpha, params.beta, n)


def n_alpha(alpha: int, n: int) -> int:
    """``n``-th term of ``N(alpha)``: ``n * alpha**(n-1)``, and 0 at ``n = 0``."""
    _check_alpha(alpha)
    _check_natural("n", n)
    return _coefficient(1, alpha, alpha, n)


@lru_cache(maxsize=None)
def _f_factorial(alpha: int, n: int) -> int:
    # iterative so that large n does not recurse through the cache
    acc = 1
    for j in range(1, n + 1):
        acc *= j * alpha ** (j - 1)
    return acc


def f_factorial(alpha: int, n: int) -> int:
    """``n_F! = 1_F * 2_F * ... * n_F`` over ``N(alpha)``; ``0_F! = 1``."""
    _check_alpha(alpha)
    _check_natural("n", n)
    return _f_factorial(alpha, n)


def falling_f_factorial(alpha: int, n: int, k: int) -> int:
    """``n_F (n-1)_F ... (n-k+1)_F`` over ``N(alpha)``; empty product for ``k = 0``."""
    _check_alpha(alpha)
    _check_natural("n", n)
    _check_natural("k", k)
    if k > n:
        raise ValueError(f"k must not exceed n (k={k}, n={n})")
    acc = 1
    for j in range(n - k + 1, n + 1):
        acc *= j * alpha ** (j - 1)
    return acc


class FSequence:
    """Lazily extended term list of one sequence.

    Indexing past the computed prefix extends it on demand.

    >>> seq = FSequence(SequenceParams.n_alpha(3))
    >>> seq[:6]
    [0, 1, 6, 27, 108, 405]
    """

    def __init__(self, params: SequenceParams) -> None:
        self.params = params
        self._terms: list[int] = [0]
        self._lock = threading.Lock()

    def _extend(self, upto: int) -> None:
        with self._lock:
            while len(self._terms) <= upto:
                self._terms.append(coefficient(self.params, len(self._terms)))

    def __getitem__(self, index):
        if isinstance(index, slice):
            if index.stop is None:
                raise ValueError("FSequence is infinite; slices need an explicit stop")
            self._extend(index.stop - 1)
            return self._terms[index]
        _check_natural("index", index)
        self._extend(index)
        return self._terms[index]

    def terms(self, max_n: int) -> list[int]:
        """Terms ``0..max_n`` inclusive."""
        return self[: max_n + 1]

    def __repr__(self) -> str:
        p = self.params
        return f"FSequence(one_f={p.one_f}, alpha={p.alpha}, beta={p.beta})"
