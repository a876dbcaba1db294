"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .analysis import build_document, render_text
from .classify import expansion
from .hj import GroupError, dual_graph, validate_group
from .oracle import CSV_HEADER, cross_check
from .quiver import build_ar_quiver, dual_graph_to_dot, quiver_to_dot

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
NMAX_LIMIT = 10000


def _group_or_exit(n: int, a: int):
    try:
        return validate_group(n, a)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_analyze(args) -> int:
    g = _group_or_exit(args.n, args.a)
    doc = build_document(g)
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(g, doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _group_or_exit(args.n, args.a)
    rep = cross_check(g)
    if rep.passed:
        print(f"{g}: all {rep.checks} checks passed")
        return EXIT_OK
    print(f"{g}: {len(rep.failures)} of {rep.checks} checks failed")
    for msg in rep.failures:
        print(f"  MISMATCH {msg}")
    return EXIT_FAIL


def _census_rows(n: int) -> list[list]:
    return [cross_check(validate_group(n, a)).csv_row() for a in range(1, n) if gcd(n, a) == 1]


def census_rows(nmax: int, jobs: int = 1) -> list[list]:
    """One row per coprime (n, a), 2 <= n <= nmax, in lexicographic order."""
    orders = range(2, nmax + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order whatever the scheduling
            chunks = list(pool.map(_census_rows, orders))
    else:
        chunks = [_census_rows(n) for n in orders]
    return [row for chunk in chunks for row in chunk]


def cmd_census(args) -> int:
    if not 2 <= args.nmax <= NMAX_LIMIT:
        print(f"error: --nmax must lie in [2, {NMAX_LIMIT}], got {args.nmax}", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    rows = census_rows(args.nmax, args.jobs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    _write(args.out, buf.getvalue())
    failed = [(row[0], row[1]) for row in rows if not row[-1]]
    if failed:
        print(f"census: {len(failed)} of {len(rows)} pairs failed, first {failed[0]}", file=sys.stderr)
        return EXIT_FAIL
    if args.out not in (None, "-"):
        print(f"census: {len(rows)} pairs with n <= {args.nmax}, all passed")
    return EXIT_OK


def cmd_export(args) -> int:
    g = _group_or_exit(args.n, args.a)
    if args.which == "quiver":
        text = quiver_to_dot(build_ar_quiver(g))
    else:
        text = dual_graph_to_dot(dual_graph(expansion(g)))
    _write(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicmcm",
        description="Special and Ulrich MCM modules over cyclic quotient surface singularities 1/n(1,a).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify every M_t for one group")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="cross-check one group against the monomial oracle")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="cross-check every coprime (n, a) up to a bound, CSV out")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", default=None, help="CSV path (default: standard output)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("export", help="write the AR quiver or dual graph in DOT format")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("which", choices=["quiver", "dualgraph"])
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
