"""Command-line front end: base checks, set computation, claim scans, tables.

Report bodies are deterministic: same command and parameters give the same
bytes regardless of --jobs, so elapsed times and worker counts never appear
in them.  Exit codes: 0 success / claim holds, 1 predicate false, 2 usage or
input error, 3 scan violations or table diffs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .core import (
    NotSemiprime,
    korselt_weights,
    q_korselt_set,
    semiprime_from_n,
    z_korselt_set,
)
from .numtheory import (
    NotSquarefree,
    ZeroDenominator,
    factor_squarefree,
    format_rational,
    parse_rational,
)
from .theorems import (
    CLAIMS,
    expected_table1,
    expected_table2,
    reproduce_table1,
    reproduce_table2,
    table_diff,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_VIOLATIONS = 3


def _document(command: str, parameters: dict, rows: list[dict], summary: dict) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "rows": rows,
        "summary": summary,
        "version": __version__,
    }


def _render(doc: dict, columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        writer.writerow(columns)
        for row in doc["rows"]:
            writer.writerow([row[c] for c in columns])
        return buf.getvalue()
    # plain aligned text
    cells = [[str(row[c]) for c in columns] for row in doc["rows"]]
    widths = [max([len(c)] + [row[i] and len(row[i]) or 0 for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(name.ljust(w) for name, w in zip(columns, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    lines.append("")
    lines.append("; ".join(f"{k} = {v}" for k, v in doc["summary"].items()))
    return "\n".join(lines) + "\n"


def _emit(doc: dict, columns: list[str], args, code: int) -> int:
    body = _render(doc, columns, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return code


def _join(values) -> str:
    return ";".join(format_rational(v) for v in values)


def _cmd_base_check(args) -> int:
    try:
        alpha = parse_rational(args.alpha)
        factors = factor_squarefree(args.n)
    except (ValueError, ZeroDenominator, NotSquarefree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if len(factors) < 2:
        print(f"error: {args.n} is prime; a squarefree composite is required", file=sys.stderr)
        return EXIT_USAGE
    a1, a2 = alpha.numerator, alpha.denominator
    if a1 == 0 or alpha == args.n:
        print(f"alpha = {format_rational(alpha)} is excluded by definition (0 and n are never bases)")
        print("false")
        return EXIT_FALSE
    big = a2 * args.n - a1
    verdict = True
    for r in factors:
        d = a2 * r - a1
        ok = d != 0 and big % d == 0
        verdict = verdict and ok
        print(f"r = {r}: {a2}*{r} - ({a1}) = {d} divides {a2}*{args.n} - ({a1}) = {big}: {'yes' if ok else 'no'}")
    print("true" if verdict else "false")
    return EXIT_TRUE if verdict else EXIT_FALSE


def _cmd_set(args) -> int:
    try:
        sp = semiprime_from_n(args.n)
    except NotSemiprime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.domain == "z":
        elems = [(Fraction(b), "z") for b in z_korselt_set(sp)]
        summary = {"z_weight": len(elems)}
    elif args.domain == "qz":
        ks = q_korselt_set(sp)
        elems = [(f, "qz") for f in ks.fractional_part]
        summary = {"qz_weight": len(elems)}
    else:
        ks = q_korselt_set(sp)
        z, qz, total = korselt_weights(ks)
        elems = sorted(
            [(Fraction(b), "z") for b in ks.integer_part]
            + [(f, "qz") for f in ks.fractional_part]
        )
        summary = {"z_weight": z, "qz_weight": qz, "q_weight": total}
    rows = [{"n": args.n, "base": format_rational(v), "domain": d} for v, d in elems]
    doc = _document("set", {"n": args.n, "domain": args.domain}, rows, summary)
    return _emit(doc, ["n", "base", "domain"], args, EXIT_TRUE)


def _cmd_verify(args) -> int:
    p_max = args.p_max if args.p_max is not None else args.q_max
    if p_max < 3 or args.q_max < 3:
        print("error: scan bounds must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    report = CLAIMS[args.claim](p_max, args.q_max, jobs=args.jobs)
    rows = [{"n": n, "detail": detail} for n, detail in report.violations]
    summary = {"checked": report.checked, "violations": len(report.violations)}
    doc = _document(
        "verify",
        {"claim": args.claim, "p_max": p_max, "q_max": args.q_max},
        rows,
        summary,
    )
    return _emit(doc, ["n", "detail"], args, EXIT_TRUE if report.ok else EXIT_VIOLATIONS)


def _cmd_tables(args) -> int:
    if args.which == 1:
        computed = reproduce_table1(jobs=args.jobs)
        expected = expected_table1()
        rows = [{"n": n, "z_set": _join(zs)} for n, zs in computed]
        columns = ["n", "z_set"]
    else:
        computed = reproduce_table2(jobs=args.jobs)
        expected = expected_table2()
        rows = [
            {"i": i, "n": n, "z_set": _join(zs), "qz_weight": qz}
            for i, n, zs, qz in computed
        ]
        columns = ["i", "n", "z_set", "qz_weight"]
    diffs = table_diff(computed, expected)
    for line in diffs:
        print(f"diff: {line}", file=sys.stderr)
    summary = {"rows": len(rows), "expected_rows": len(expected), "diffs": len(diffs)}
    doc = _document("tables", {"which": args.which}, rows, summary)
    return _emit(doc, columns, args, EXIT_TRUE if not diffs else EXIT_VIOLATIONS)


def _add_output_flags(sub, jobs: bool = True) -> None:
    sub.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sub.add_argument("--out", metavar="FILE", default=None, help="write the report body to FILE instead of stdout")
    if jobs:
        sub.add_argument("--jobs", type=int, default=os.cpu_count() or 1, metavar="K", help="worker processes (wall time only, never output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="korselt",
        description="Exact rational Korselt sets of semiprimes: compute, check, scan, reproduce tables.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("base-check", help="decide whether alpha is a base of n, with the per-prime breakdown")
    b.add_argument("n", type=int)
    b.add_argument("alpha", help='rational base, "a" or "a/b"')
    b.set_defaults(func=_cmd_base_check)

    s = sub.add_parser("set", help="compute a Korselt set partition of a semiprime")
    s.add_argument("n", type=int)
    s.add_argument("--domain", choices=("z", "qz", "q"), default="q")
    _add_output_flags(s, jobs=False)
    s.set_defaults(func=_cmd_set)

    v = sub.add_parser("verify", help="scan a claim over all semiprimes in a range")
    v.add_argument("claim", choices=sorted(CLAIMS))
    v.add_argument("--q-max", type=int, required=True)
    v.add_argument("--p-max", type=int, default=None, help="defaults to --q-max")
    _add_output_flags(v)
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("tables", help="reproduce an embedded reference table and diff against it")
    t.add_argument("which", type=int, choices=(1, 2))
    _add_output_flags(t)
    t.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
