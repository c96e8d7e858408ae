"""Command-line interface: ``fnomial {sequence,triangle,count,verify}``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from . import coefficients, dags, inversion, oracle, sequences
from .compositions import weak_compositions

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("plain", "csv", "json", "bfile")

# oracle sweeps run by `verify` without an explicit --max-n
BIPARTITE_MAX_N = 5
COLORED_MAX_N = 4
COLORED_MAX_K = 4
DAG_MAX_N = 5
DEFAULT_VERIFY_BUDGET = 2**20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- rendering ---------------------------------------------------------------


def render_sequence(values: list[int], fmt: str, meta: dict | None = None) -> str:
    if fmt == "plain":
        return " ".join(map(str, values))
    if fmt == "csv":
        return ",".join(map(str, values))
    if fmt == "bfile":
        return "\n".join(f"{i} {v}" for i, v in enumerate(values))
    return json.dumps({**(meta or {}), "terms": [str(v) for v in values]})


def render_triangle(rows, fmt: str, meta: dict | None = None) -> str:
    if fmt == "plain":
        return "\n".join(" ".join(map(str, r)) for r in rows)
    if fmt == "csv":
        return "\n".join(",".join(map(str, r)) for r in rows)
    if fmt == "bfile":
        flat = [v for r in rows for v in r]
        return "\n".join(f"{i} {v}" for i, v in enumerate(flat))
    return json.dumps({**(meta or {}), "rows": [[str(v) for v in r] for r in rows]})


def render_value(value: int, fmt: str, meta: dict | None = None) -> str:
    if fmt in ("plain", "csv"):
        return str(value)
    if fmt == "bfile":
        return f"0 {value}"
    return json.dumps({**(meta or {}), "value": str(value)})


# -- count family parsing ----------------------------------------------------

_FAMILY_RE = re.compile(r"^\s*([a-z-]+)\s*\(\s*<?([0-9,\s]*)>?\s*\)\s*$")
_FAMILY_ARITY = {"bipartite": 2, "dag": 1, "colored-total": 2, "row-sum": 1}


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """Parse ``name(a,b,...)``, e.g. ``bipartite(4,2)`` or ``colored(1,1,1)``."""
    m = _FAMILY_RE.match(spec)
    if not m:
        raise UsageError(f"cannot parse family {spec!r}")
    name = m.group(1)
    raw = [p for p in m.group(2).replace(" ", "").split(",") if p]
    args = tuple(int(p) for p in raw)
    if name == "colored":
        return name, args
    if name not in _FAMILY_ARITY:
        raise UsageError(
            f"unknown family {name!r}; expected one of bipartite, colored, dag, "
            "colored-total, row-sum"
        )
    if len(args) != _FAMILY_ARITY[name]:
        raise UsageError(f"{name} takes {_FAMILY_ARITY[name]} argument(s), got {len(args)}")
    return name, args


def evaluate_family(alpha: int, name: str, args: tuple[int, ...]) -> int:
    if name == "bipartite":
        return coefficients.fnomial(alpha, *args)
    if name == "colored":
        return coefficients.multi_fnomial(alpha, args)
    if name == "dag":
        return dags.dag_count(alpha, *args)
    if name == "colored-total":
        n, k = args
        return coefficients.colored_total(alpha, n, k)
    if name == "row-sum":
        return coefficients.row_sum(alpha, *args)
    raise UsageError(f"unknown family {name!r}")


# -- verification ------------------------------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    seconds: float
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def run(self, name: str, fn: Callable[[], str | None]) -> None:
        t0 = time.perf_counter()
        try:
            detail = fn()
            ok = detail is None
        except AssertionError as exc:
            ok, detail = False, str(exc)
        self.checks.append(Check(name, ok, time.perf_counter() - t0, detail or ""))

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"{status}  {c.name}  ({c.seconds:.3f}s){tail}")
        for s in self.skipped:
            lines.append(f"SKIP  {s}  (over budget)")
        passed = sum(c.ok for c in self.checks)
        lines.append(
            f"{passed}/{len(self.checks)} checks passed, {len(self.skipped)} skipped"
        )
        return "\n".join(lines)


def _mismatch(pairs) -> str | None:
    bad = [(key, a, b) for key, a, b in pairs if a != b]
    if bad:
        key, a, b = bad[0]
        return f"{len(bad)} mismatch(es); first at {key}: {a} != {b}"
    return None


def verify(
    alphas: list[int],
    budget: int = DEFAULT_VERIFY_BUDGET,
    max_n: int | None = None,
    workers: int = 1,
) -> Report:
    """Run every formula-vs-oracle and algebraic identity check.

    Without ``max_n`` the oracle sweeps stop at their default sizes and cases
    over ``budget`` are skipped. With ``max_n`` every oracle case up to that
    size is required, and one over budget raises :class:`oracle.BudgetExceeded`.
    """
    report = Report()
    strict = max_n is not None
    bip_n = max_n if strict else BIPARTITE_MAX_N
    col_n = max_n if strict else COLORED_MAX_N
    dag_n = max_n if strict else DAG_MAX_N
    ident_n = 15

    def within(size: int, label: str) -> bool:
        if size <= budget:
            return True
        if strict:
            raise oracle.BudgetExceeded(f"{label} needs {size} instances, budget is {budget}")
        report.skipped.append(label)
        return False

    for a in alphas:
        report.run(
            f"alpha={a} addition law k,m<=20",
            lambda a=a: _mismatch(
                ((k, m), sequences.n_alpha(a, k + m),
                 a**m * sequences.n_alpha(a, k) + a**k * sequences.n_alpha(a, m))
                for k in range(21) for m in range(21)
            ),
        )

        def triple(a=a):
            out = []
            for n in range(31):
                for k in range(n + 1):
                    c = coefficients.fnomial(a, n, k)
                    out.append(((n, k), c, coefficients.fnomial_by_definition(a, n, k)))
                    out.append(((n, k), c, coefficients.fnomial_by_recurrence(a, n, k)))
            return _mismatch(out)

        report.run(f"alpha={a} triple-route F-nomials n<=30", triple)

        def product(a=a):
            size = 21
            m = coefficients.triangle(a, size - 1).rows
            inv = inversion.inverse_triangle(a, size - 1).rows
            prod = inversion.lower_triangular_product(m, inv)
            return _mismatch(
                ((i, k), prod[i][k], int(i == k)) for i in range(size) for k in range(i + 1)
            )

        report.run(f"alpha={a} M * M^-1 = I (21x21)", product)
        report.run(
            f"alpha={a} A(n) = (-1)^n <n 0>^-1, n<={ident_n}",
            lambda a=a: _mismatch(
                (n, dags.dag_count(a, n), (-1) ** n * inversion.inverse_corner(a, n))
                for n in range(ident_n + 1)
            ),
        )
        report.run(
            f"alpha={a} corner: composition sum = triangular solve, n<=12",
            lambda a=a: _mismatch(
                (n, inversion.inverse_corner_enumerated(a, n),
                 inversion.inverse_corner_by_solve(a, n))
                for n in range(13)
            ),
        )

        bip_cases = [
            (n, k) for n in range(bip_n + 1) for k in range(n + 1)
            if within(_bip_size(a, n, k), f"alpha={a} bipartite oracle n={n} k={k}")
        ]
        report.run(
            f"alpha={a} bipartite oracle ({len(bip_cases)} cases, n<={bip_n})",
            lambda a=a, cases=bip_cases: _mismatch(
                ((n, k), oracle.count_bipartite_bruteforce(a, n, k, budget),
                 coefficients.fnomial(a, n, k))
                for n, k in cases
            ),
        )

        col_cases = [
            c for n in range(col_n + 1) for k in range(1, COLORED_MAX_K + 1)
            for c in weak_compositions(n, k)
            if within(_col_size(a, c), f"alpha={a} coloured oracle {c}")
        ]
        report.run(
            f"alpha={a} coloured oracle ({len(col_cases)} compositions, n<={col_n}, k<={COLORED_MAX_K})",
            lambda a=a, cases=col_cases: _mismatch(
                (c, oracle.count_colored_bruteforce(a, c, budget),
                 coefficients.multi_fnomial(a, c))
                for c in cases
            ),
        )

        dag_cases = [
            n for n in range(dag_n + 1)
            if within(a ** (n * (n - 1)), f"alpha={a} DAG oracle n={n}")
        ]

        def dag_oracle(a=a, cases=dag_cases):
            out = []
            for n in cases:
                census = oracle.out_point_census(a, n, budget, workers)
                assert n == 0 or 0 not in census, f"n={n}: acyclic instance with no out-point"
                out.append((n, sum(census.values()), dags.dag_count(a, n)))
            return _mismatch(out)

        report.run(
            f"alpha={a} DAG oracle + out-point census (n in {dag_cases})", dag_oracle
        )

    return report


def _bip_size(alpha: int, n: int, k: int) -> int:
    return math.comb(n, k) * alpha ** (k * (n - k))


def _col_size(alpha: int, comp: tuple[int, ...]) -> int:
    n, k = sum(comp), len(comp)
    pairs = (n * n - sum(b * b for b in comp)) // 2
    return max(k**n, coefficients.multi_fnomial(1, comp) * alpha**pairs)


# -- commands ----------------------------------------------------------------


def _positive_alpha(alpha: int) -> int:
    if alpha < 1:
        raise UsageError(f"--alpha must be a positive integer, got {alpha}")
    return alpha


def cmd_sequence(args) -> str:
    alpha = _positive_alpha(args.alpha)
    values = sequences.FSequence(sequences.SequenceParams.n_alpha(alpha)).terms(args.max_n)
    return render_sequence(values, args.format, {"alpha": alpha})


def cmd_triangle(args) -> str:
    alpha = _positive_alpha(args.alpha)
    if args.inverse:
        rows = inversion.inverse_triangle(alpha, args.max_n).rows
    else:
        rows = coefficients.triangle(alpha, args.max_n, verify=True).rows
    return render_triangle(rows, args.format, {"alpha": alpha, "inverse": args.inverse})


def cmd_count(args) -> str:
    alpha = _positive_alpha(args.alpha)
    name, fargs = parse_family(args.family)
    value = evaluate_family(alpha, name, fargs)
    return render_value(value, args.format, {"alpha": alpha, "family": args.family})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fnomial",
        description="N(alpha) F-nomial coefficients and labeled multigraph counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, max_n_default=None):
        p.add_argument("--alpha", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default="plain")
        if max_n_default is not None:
            p.add_argument("--max-n", type=int, default=max_n_default)

    p = sub.add_parser("sequence", help="terms n_F of N(alpha) for n = 0..max-n")
    common(p, 10)
    p = sub.add_parser("triangle", help="F-nomial triangle, or its inverse")
    common(p, 7)
    p.add_argument("--inverse", action="store_true")
    p = sub.add_parser("count", help="a single count, e.g. --family 'dag(4)'")
    common(p)
    p.add_argument("--family", required=True)
    p = sub.add_parser("verify", help="formula-vs-oracle and identity checks")
    p.add_argument("--alpha", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--budget", type=int, default=DEFAULT_VERIFY_BUDGET)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", None) is not None and args.max_n < 0:
        parser.error("--max-n must be non-negative")
    try:
        if args.command == "verify":
            for a in args.alpha:
                _positive_alpha(a)
            report = verify(args.alpha, args.budget, args.max_n, args.workers)
            print(report.render())
            return EXIT_OK if report.ok else EXIT_MISMATCH
        handler = {"sequence": cmd_sequence, "triangle": cmd_triangle, "count": cmd_count}
        print(handler[args.command](args))
        return EXIT_OK
    except oracle.BudgetExceeded as exc:
        print(f"fnomial: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"fnomial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
