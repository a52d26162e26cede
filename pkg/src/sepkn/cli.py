"""Command-line interface.

Subcommands mirror the library: block-vector extraction, amplitude
queries, colorability checks, the greedy colorer, counter-example
constructors, exact separation numbers, the prediction scan, class
counting, the kernel report and the built-in verification suite.

Exit codes: 0 success, 1 domain or input error, 2 budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .choosability import amplitude_ok, brute_force_color
from .colorsym import colorsym
from .constructions import (
    choosable_biKn,
    counterexample_high,
    counterexample_low,
    counterexample_xb,
)
from .counting import count_classes, degree_fit
from .errors import BudgetError, DomainError
from .kernel import basis_ker_a, basis_ker_ac, extreme_points, rank, vec_a, vec_c, vec_psi
from .search import SepQuery, conjecture_scan, sep, sep_symmetric
from .setsys import ListAssignment, PIVector, amplitude, pi_vector, realize
from . import setsys


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2), out)


def _frac_json(value: Fraction):
    return int(value) if value.denominator == 1 else str(value)


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise DomainError(f"bad subset {text!r}: {exc}") from exc


# -- subcommand handlers -------------------------------------------------------


def _cmd_pi(args) -> int:
    if args.realize:
        v = PIVector.from_json(_load_json(args.file))
        _emit_json(realize(v, args.base).to_json(), args.out)
    else:
        L = ListAssignment.from_json(_load_json(args.file))
        _emit_json(pi_vector(L).to_json(), args.out)
    return 0


def _cmd_amplitude(args) -> int:
    v = PIVector.from_json(_load_json(args.file))
    subset = _parse_subset(args.subset)
    _emit_json({"subset": subset, "amplitude": amplitude(v, subset)}, args.out)
    return 0


def _cmd_check(args) -> int:
    L = ListAssignment.from_json(_load_json(args.file))
    if args.oracle:
        verdict = brute_force_color(L, args.b)
    else:
        verdict = amplitude_ok(pi_vector(L), args.b)
    _emit_json(verdict.to_json(), args.out)
    return 0


def _cmd_colorsym(args) -> int:
    L = ListAssignment.from_json(_load_json(args.file))
    _emit_json(colorsym(L, args.b).to_json(), args.out)
    return 0


def _cmd_construct(args) -> int:
    if args.family == "xb":
        if args.x is None:
            raise DomainError("--family xb needs --x")
        v = counterexample_xb(args.n, args.a, args.b, args.x)
    elif args.family == "low":
        v = counterexample_low(args.n, args.a, args.b)
    else:
        v = counterexample_high(args.n, args.a, args.b)
    from .verify import max_pair

    audit = {
        "per_vertex_sums": [setsys.list_size(v, i) for i in range(1, v.n + 1)],
        "max_pair_intersection": max_pair(v),
        "amplitude": amplitude(v, range(1, v.n + 1)),
    }
    _emit_json({"vector": v.to_json(), "audit": audit}, args.out)
    return 0


def _cmd_sep(args) -> int:
    q = SepQuery(args.n, args.a, args.b)
    if args.symmetric_only:
        value = sep_symmetric(q)
        _emit_json(
            {"n": args.n, "a": args.a, "b": args.b, "value": value,
             "certificate_kind": "symmetric-bound", "exact": False},
            args.out,
        )
    else:
        _emit_json(sep(q, max_m=args.max_m, jobs=args.jobs).to_json(), args.out)
    return 0


def _cmd_scan(args) -> int:
    rows = conjecture_scan(args.n, args.a_max, args.b_max, jobs=args.jobs)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "a", "b", "sep", "conjectured", "epsilon"])
    for r in rows:
        writer.writerow([r.n, r.a, r.b, r.sep, r.conjectured, r.epsilon])
    _emit(buf.getvalue(), args.out)
    if args.figure:
        from .report import render_scan_figure

        render_scan_figure(rows, args.figure)
    return 0


def _cmd_count(args) -> int:
    if args.fit:
        report = degree_fit(args.n, args.a)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["a", "value", "level", "difference"])
        values = list(report.values)
        table = [values]
        while len(table[-1]) > 1:
            prev = table[-1]
            table.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
        for level, row in enumerate(table):
            for idx, entry in enumerate(row):
                writer.writerow([idx if level == 0 else "", values[idx] if level == 0 else "", level, entry])
        _emit(buf.getvalue(), args.out)
        if args.out not in (None, "-"):
            summary = report.to_json()
            del summary["values"]
            sys.stdout.write(json.dumps(summary, indent=2) + "\n")
        if args.figure:
            from .report import render_count_figure

            render_count_figure(args.n, report.values, args.figure)
    else:
        _emit_json(count_classes(args.n, args.a).to_json(), args.out)
        if args.figure:
            from .report import render_count_figure

            values = [count_classes(args.n, alpha).total for alpha in range(args.a + 1)]
            render_count_figure(args.n, values, args.figure)
    return 0


def _cmd_kernel(args) -> int:
    n = args.n
    payload: dict = {
        "n": n,
        "a_row": [_frac_json(e) for e in vec_a(n)],
        "c_row": [_frac_json(e) for e in vec_c(n)],
        "amplitude_row": [_frac_json(e) for e in vec_psi(n)],
    }
    if n >= 3:
        basis = basis_ker_a(n)
        payload["ker_a"] = {
            "dimension": len(basis),
            "rank": rank(basis),
            "basis": [[_frac_json(e) for e in v] for v in basis],
        }
    if n >= 4:
        basis = basis_ker_ac(n)
        payload["ker_ac"] = {
            "dimension": len(basis),
            "rank": rank(basis),
            "basis": [[_frac_json(e) for e in v] for v in basis],
        }
    if args.a is not None and args.c is not None:
        x1, x2 = extreme_points(n, args.a, args.c)
        payload["x1"] = None if x1 is None else [_frac_json(e) for e in x1]
        payload["x2"] = None if x2 is None else [_frac_json(e) for e in x2]
    _emit_json(payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_all

    items = run_all(max_n=args.max_n)
    for item in items:
        print(item.line)
    failures = [i for i in items if i.status == "FAIL"]
    skipped = [i for i in items if i.status == "SKIPPED"]
    print(
        f"-- {sum(i.status == 'PASS' for i in items)} passed, "
        f"{len(failures)} failed, {len(skipped)} skipped"
    )
    return 3 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepkn",
        description="List coloring with separation on complete graphs: exact tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="block vector of an assignment (or realize one)")
    p.add_argument("--file", required=True, help="assignment JSON (vector JSON with --realize)")
    p.add_argument("--realize", action="store_true", help="invert: vector file to assignment")
    p.add_argument("--base", type=int, default=1, help="first color when realizing")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_pi)

    p = sub.add_parser("amplitude", help="union size over a vertex subset")
    p.add_argument("--file", required=True, help="vector JSON")
    p.add_argument("--subset", required=True, help="vertices, e.g. 1,2,3")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_amplitude)

    p = sub.add_parser("check", help="b-set colorability of an assignment")
    p.add_argument("--file", required=True, help="assignment JSON")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use the exhaustive oracle")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("colorsym", help="greedy block-draining multi-coloring")
    p.add_argument("--file", required=True, help="assignment JSON")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_colorsym)

    p = sub.add_parser("construct", help="counter-example families")
    p.add_argument("--family", choices=["xb", "low", "high"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=int, default=None, help="block size ratio for --family xb")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("sep", help="exact separation number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--max-m", type=int, default=None, help="largest sub-order searched")
    p.add_argument("--symmetric-only", action="store_true", help="symmetric upper bound only")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the per-order searches")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_sep)

    p = sub.add_parser("scan", help="exact values vs the mid-range prediction (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", "-o", default=None)
    p.add_argument("--figure", default=None, help="also render a PNG/PDF figure here")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("count", help="assignment classes up to block equivalence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--fit", action="store_true", help="difference table and degree fit (CSV)")
    p.add_argument("--out", "-o", default=None)
    p.add_argument("--figure", default=None, help="also render a growth figure here")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("kernel", help="constraint rows, kernel bases, boundary solutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--max-n", type=int, default=5, help="skip checks needing larger orders")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
