"""Iterators over integer compositions, in lexicographic order.

Two flavours are kept apart on purpose: weak compositions (parts >= 0, fixed
number of parts) index colour-class size vectors, strict compositions
(parts >= 1, any number of parts) index the inverse-matrix sum. Both walk
without recursion.
"""

from __future__ import annotations

from typing import Iterator


def weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every ``k``-tuple of non-negative ints summing to ``n``.

    >>> list(weak_compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k == 0:
        if n == 0:
            yield ()
        return
    c = [0] * k
    c[-1] = n
    while True:
        yield tuple(c)
        p = k - 1
        while p >= 1 and c[p] == 0:
            p -= 1
        if p == 0:
            return
        rest = c[p]
        c[p - 1] += 1
        c[p] = 0
        c[-1] = rest - 1


def strict_compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of positive ints summing to ``n``.

    ``n = 0`` yields the empty composition only.

    >>> list(strict_compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield ()
        return
    c = [1] * n
    while True:
        yield tuple(c)
        if len(c) == 1:
            return
        last = c.pop()
        c[-1] += 1
        c.extend([1] * (last - 1))
