"""Exhaustive enumeration of the labeled graph families counted elsewhere.

Nothing here calls the counting formulas. Every instance of a family is
generated and tested, so at small sizes these functions are ground truth for
:mod:`fnomial.coefficients` and :mod:`fnomial.dags`.

Enumeration is deterministic: multiplicities run as mixed-radix counters over
the pair slots in row-major order. Every entry point takes a ``budget`` (the
maximum number of instances it may visit) and raises :class:`BudgetExceeded`
instead of returning a partial count.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coefficients import CompositionLike, _as_composition
from .sequences import _check_alpha, _check_natural

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "MultiplicityMatrix",
    "BipartiteInstance",
    "iter_bipartite",
    "iter_multiplicity_matrices",
    "count_bipartite_bruteforce",
    "count_colored_bruteforce",
    "count_dags_bruteforce",
    "is_acyclic",
    "is_acyclic_by_peeling",
    "out_point_census",
]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The requested enumeration would visit more instances than allowed."""


def _guard(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceeded(f"{what} needs {size} instances, budget is {budget}")


@dataclass(frozen=True)
class MultiplicityMatrix:
    """``n x n`` edge multiplicities of a labeled alpha-multi digraph.

    ``entries[i][j]`` is the number of parallel edges ``i -> j``.
    """

    alpha: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("multiplicity matrix must be square")
            if row[i] != 0:
                raise ValueError(f"diagonal entry ({i}, {i}) must be zero")
            for v in row:
                if not 0 <= v < self.alpha:
                    raise ValueError(f"multiplicity {v} outside 0..{self.alpha - 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], alpha: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if alpha is None:
            alpha = 1 + max((v for r in rows for v in r), default=0)
        return cls(alpha, rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def out_masks(self) -> tuple[int, ...]:
        """Support as bitmasks: bit ``j`` of ``out_masks()[i]`` is set iff ``i -> j``."""
        return tuple(
            sum(1 << j for j, v in enumerate(row) if v) for row in self.entries
        )

    def out_points(self) -> list[int]:
        """Vertices with in-degree zero."""
        return [j for j in range(self.n) if all(row[j] == 0 for row in self.entries)]


@dataclass(frozen=True)
class BipartiteInstance:
    """A labeled bipartite alpha-multigraph with a distinguished side ``left``."""

    n: int
    left: frozenset[int]
    cross: tuple[tuple[tuple[int, int], int], ...]

    def multiplicity(self, u: int, v: int) -> int:
        for pair, m in self.cross:
            if pair == (u, v) or pair == (v, u):
                return m
        return 0


# -- acyclicity -------------------------------------------------------------


def is_acyclic(m: MultiplicityMatrix) -> bool:
    """Depth-first cycle search on the support digraph."""
    n = m.n
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done
    succ = [[j for j, v in enumerate(row) if v] for row in m.entries]
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    break
            else:
                state[node] = 2
                stack.pop()
    return True


def _peel(out: Sequence[int], full: int) -> bool:
    remaining = full
    while remaining:
        incoming = 0
        rest = remaining
        while rest:
            low = rest & -rest
            incoming |= out[low.bit_length() - 1]
            rest ^= low
        sources = remaining & ~incoming
        if not sources:
            return False
        remaining &= ~sources
    return True


def is_acyclic_by_peeling(m: MultiplicityMatrix) -> bool:
    """Acyclicity by repeatedly deleting in-degree-zero vertices."""
    return _peel(m.out_masks(), (1 << m.n) - 1)


# -- bipartite and coloured families ---------------------------------------


def iter_bipartite(alpha: int, n: int, k: int) -> Iterator[BipartiteInstance]:
    """Every labeled bipartite alpha-multigraph on ``n`` vertices with ``|left| = k``."""
    _check_alpha(alpha)
    _check_natural("n", n)
    _check_natural("k", k)
    if k > n:
        raise ValueError(f"k must not exceed n (k={k}, n={n})")
    vertices = range(n)
    for left in itertools.combinations(vertices, k):
        right = [v for v in vertices if v not in left]
        pairs = [(u, v) for u in left for v in right]
        for mults in itertools.product(range(alpha), repeat=len(pairs)):
            yield BipartiteInstance(n, frozenset(left), tuple(zip(pairs, mults)))


def count_bipartite_bruteforce(
    alpha: int, n: int, k: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Count labeled bipartite alpha-multigraphs ``G(alpha, n, k)`` one by one."""
    if 0 <= k <= n:
        _guard(math.comb(n, k) * alpha ** (k * (n - k)), budget, "bipartite enumeration")
    count = 0
    for g in iter_bipartite(alpha, n, k):
        assert len(g.left) == k and len(g.cross) == k * (n - k)
        count += 1
    return count


def count_colored_bruteforce(
    alpha: int, comp: CompositionLike, budget: int = DEFAULT_BUDGET
) -> int:
    """Count labeled alpha-multigraphs coloured with ordered class sizes ``comp``.

    All ``k**n`` colour assignments are scanned and those with the wrong class
    sizes discarded; each survivor is paired with every multiplicity assignment
    on its differently-coloured vertex pairs.
    """
    _check_alpha(alpha)
    comp = _as_composition(comp)
    n, k, target = comp.n, len(comp), comp.parts
    _guard(k**n, budget, "colour assignment scan")
    pairs_all = list(itertools.combinations(range(n), 2))
    seen = 0
    count = 0
    for colouring in itertools.product(range(k), repeat=n):
        sizes = [0] * k
        for c in colouring:
            sizes[c] += 1
        if tuple(sizes) != target:
            continue
        cross = [(u, v) for u, v in pairs_all if colouring[u] != colouring[v]]
        per = alpha ** len(cross)
        seen += per
        _guard(seen, budget, "coloured multigraph enumeration")
        for _ in itertools.product(range(alpha), repeat=len(cross)):
            count += 1
    return count


# -- digraphs ----------------------------------------------------------------


def _row_choices(alpha: int, n: int, i: int) -> list[tuple[tuple[int, ...], int]]:
    """Row ``i`` assignments in mixed-radix order, with their support masks."""
    cols = [j for j in range(n) if j != i]
    out = []
    for vals in itertools.product(range(alpha), repeat=n - 1):
        mask = 0
        for j, v in zip(cols, vals):
            if v:
                mask |= 1 << j
        row = list(vals)
        row.insert(i, 0)
        out.append((tuple(row), mask))
    return out


def iter_multiplicity_matrices(alpha: int, n: int) -> Iterator[MultiplicityMatrix]:
    """All ``alpha**(n(n-1))`` matrices, row 0 as the most significant digit."""
    _check_alpha(alpha)
    _check_natural("n", n)
    choices = [[r for r, _ in _row_choices(alpha, n, i)] for i in range(n)]
    for rows in itertools.product(*choices):
        yield MultiplicityMatrix(alpha, rows)


def _census_chunk(alpha: int, n: int, lo: int, hi: int) -> dict[int, int]:
    """Out-point census over instances whose row-0 digit lies in ``[lo, hi)``."""
    full = (1 << n) - 1
    masks = [[m for _, m in _row_choices(alpha, n, i)] for i in range(n)]
    census: Counter[int] = Counter()
    # supports repeat only when alpha > 2
    cache: dict[tuple[int, ...], int] | None = {} if alpha > 2 else None
    for first in masks[0][lo:hi]:
        for rest in itertools.product(*masks[1:]):
            out = (first,) + rest
            key = cache.get(out) if cache is not None else None
            if key is None:
                if _peel(out, full):
                    incoming = 0
                    for o in out:
                        incoming |= o
                    key = bin(full & ~incoming).count("1")
                else:
                    key = -1
                if cache is not None:
                    cache[out] = key
            census[key] += 1
    return dict(census)


def _census(alpha: int, n: int, budget: int, workers: int) -> dict[int, int]:
    _check_alpha(alpha)
    _check_natural("n", n)
    _guard(alpha ** (n * (n - 1)), budget, "multiplicity matrix enumeration")
    if n == 0:
        return {0: 1}
    radix = alpha ** (n - 1)
    workers = max(1, min(workers, radix))
    if workers == 1:
        parts = [_census_chunk(alpha, n, 0, radix)]
    else:
        bounds = [radix * w // workers for w in range(workers + 1)]
        with ProcessPoolExecutor(workers) as pool:
            futs = [
                pool.submit(_census_chunk, alpha, n, bounds[w], bounds[w + 1])
                for w in range(workers)
            ]
            parts = [f.result() for f in futs]
    total: Counter[int] = Counter()
    for p in parts:
        total.update(p)
    return dict(total)


def count_dags_bruteforce(
    alpha: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    verify: bool = False,
) -> int:
    """Count acyclic multiplicity matrices by visiting all ``alpha**(n(n-1))`` of them.

    ``workers > 1`` splits the row-0 digit range across processes. With
    ``verify=True`` each matrix is materialised and checked by both depth-first
    search and peeling (slow; small ``n`` only).
    """
    if verify:
        _check_alpha(alpha)
        _guard(alpha ** (n * (n - 1)), budget, "multiplicity matrix enumeration")
        count = 0
        for m in iter_multiplicity_matrices(alpha, n):
            a, b = is_acyclic(m), is_acyclic_by_peeling(m)
            if a != b:
                raise AssertionError(f"acyclicity checks disagree on {m.entries}")
            count += a
        return count
    census = _census(alpha, n, budget, workers)
    return sum(v for key, v in census.items() if key >= 0)


def out_point_census(
    alpha: int, n: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> dict[int, int]:
    """Acyclic instances grouped by their number of in-degree-zero vertices.

    >>> out_point_census(2, 2)
    {1: 2, 2: 1}
    """
    census = _census(alpha, n, budget, workers)
    return {key: census[key] for key in sorted(census) if key >= 0}
