"""Command-line front end.

Subcommands: gen, verify, sweep, blocks, search. Data goes to standard
output or the requested file; diagnostics go to standard error, with
verbosity taken from the SAMS_LOG environment variable (debug, info,
warning, error). Exit codes: 0 success/valid, 1 operational error (I/O,
parse, internal check), 2 domain refusal or verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import serialize
from .compose import ConstructionError, generate
from .grids import Square, sum_profile, verify_regular_sams
from .kotzig import RectArray, kotzig, sfd, verify_kotzig
from .modular import diagonal_latin_square
from .search import SearchConfig, search

log = logging.getLogger("sams")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUSED = 2


def _setup_logging() -> None:
    level = os.environ.get("SAMS_LOG", "warning").upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    config = None
    if args.oracle_budget is not None:
        config = SearchConfig(time_budget=args.oracle_budget, mode="find_one")
    try:
        outcome = generate(
            args.n,
            args.d,
            oracle_fallback=args.oracle_fallback,
            search_config=config,
        )
    except ConstructionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if not outcome.ok:
        print(f"{outcome.refusal}: {outcome.message}")
        return EXIT_REFUSED
    text = serialize.render(outcome.square, args.format, args.d, outcome.provenance)
    try:
        _write_output(text, args.out)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_ERROR
    log.info("generated n=%d d=%d via %s", args.n, args.d, outcome.provenance)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        square, doc_d = serialize.parse_square_text(text)
    except ValueError as exc:
        print(f"cannot parse {args.path}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    d = args.d if args.d is not None else doc_d
    if d is None:
        print("a bare CSV grid needs --d", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = verify_regular_sams(square, d)
    except ValueError as exc:
        print(f"bad density: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report.valid:
        profile = sum_profile(square)
        sums = sorted(profile.sum_set())
        print(f"valid: order {square.n}, density {d}, sum set [{sums[0]}, {sums[-1]}]")
        return EXIT_OK
    for violation in report.violations:
        print(str(violation))
    return EXIT_REFUSED


def _sweep_densities(n: int) -> list[int]:
    return list(range(2, n))


def _sweep_cell(cell: tuple[int, int]) -> tuple[int, int, str, int | None, int | None, int]:
    """One (n, d) row: (n, d, status, sum_min, sum_max, millis)."""
    n, d = cell
    start = time.perf_counter()
    try:
        outcome = generate(n, d)
    except ConstructionError:
        return (n, d, "fail", None, None, _millis(start))
    if outcome.ok:
        report = verify_regular_sams(outcome.square, d)
        sums = sorted(sum_profile(outcome.square).sum_set())
        status = "pass" if report.valid else "fail"
        return (n, d, status, sums[0], sums[-1], _millis(start))
    if outcome.refusal == "external_construction":
        return (n, d, "external", None, None, _millis(start))
    return (n, d, outcome.refusal or "fail", None, None, _millis(start))


def _millis(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.n_max < 5:
        print("--n-max must be at least 5", file=sys.stderr)
        return EXIT_ERROR
    cells = [
        (n, d)
        for n in range(5, args.n_max + 1)
        if n % 6 in (1, 5)
        for d in _sweep_densities(n)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells, chunksize=8))
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    rows.sort(key=lambda row: (row[0], row[1]))

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "d", "status", "sum_min", "sum_max", "millis"])
    failures = 0
    for n, d, status, lo, hi, millis in rows:
        if status == "fail":
            failures += 1
        writer.writerow([n, d, status, "" if lo is None else lo, "" if hi is None else hi, millis])
    try:
        _write_output(buffer.getvalue(), args.out)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if failures:
        print(f"{failures} constructive cells failed", file=sys.stderr)
        return EXIT_REFUSED
    log.info("sweep complete: %d cells", len(rows))
    return EXIT_OK


def _render_rect(arr: RectArray, fmt: str, kind: str) -> str:
    if fmt == "json":
        import json

        return (
            json.dumps(
                {"kind": kind, "rows": [list(row) for row in arr.rows]}, indent=2
            )
            + "\n"
        )
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in arr.rows) + "\n"
    width = max(len(str(v)) for row in arr.rows for v in row)
    return (
        "\n".join(" ".join(str(v).rjust(width) for v in row) for row in arr.rows)
        + "\n"
    )


def cmd_blocks(args: argparse.Namespace) -> int:
    try:
        if args.kind == "latin":
            square = diagonal_latin_square(args.n)
            text = serialize.render(square, args.format, 0, "latin")
        elif args.kind == "kotzig":
            if args.d is None:
                print("kotzig blocks need --d", file=sys.stderr)
                return EXIT_ERROR
            arr = kotzig(args.d, args.n)
            if not verify_kotzig(arr).valid:  # pragma: no cover - internal check
                print("internal check failed", file=sys.stderr)
                return EXIT_ERROR
            text = _render_rect(arr, args.format, "kotzig")
        else:
            if args.t is None:
                print("sfd blocks need --t", file=sys.stderr)
                return EXIT_ERROR
            arr = sfd(args.t, args.n, args.l)
            text = _render_rect(arr, args.format, "sfd")
    except ValueError as exc:
        print(f"out of domain: {exc}")
        return EXIT_REFUSED
    try:
        _write_output(text, args.out)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    try:
        config = SearchConfig(
            time_budget=args.time_budget,
            node_limit=args.node_limit,
            deterministic=not args.randomize,
            mode=args.mode,
        )
        outcome = search(args.n, args.d, config)
    except ValueError as exc:
        print(f"out of domain: {exc}")
        return EXIT_REFUSED
    print(
        f"verdict: {outcome.verdict} nodes: {outcome.nodes} "
        f"elapsed: {outcome.elapsed:.3f}s"
    )
    if outcome.witness is not None:
        sys.stdout.write(serialize.to_pretty(outcome.witness))
        return EXIT_OK
    if outcome.verdict == "exhausted_none":
        return EXIT_REFUSED
    return EXIT_OK if outcome.verdict == "found" else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sams",
        description="Construct, verify and search regular sparse anti-magic squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a square for (n, d)")
    gen.add_argument("--n", type=int, required=True, help="order, 1 or 5 mod 6")
    gen.add_argument("--d", type=int, required=True, help="density")
    gen.add_argument(
        "--format", choices=("json", "csv", "pretty"), default="pretty"
    )
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.add_argument(
        "--oracle-fallback",
        action="store_true",
        help="let the backtracking search try densities without a construction",
    )
    gen.add_argument(
        "--oracle-budget", type=float, help="time budget in seconds for the fallback"
    )
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="verify a square file (JSON or CSV)")
    ver.add_argument("path")
    ver.add_argument("--d", type=int, help="density (required for bare CSV)")
    ver.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="certify every (n, d) up to an order bound")
    sweep.add_argument("--n-max", type=int, required=True)
    sweep.add_argument("--out", help="CSV output path (default: stdout)")
    sweep.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sweep.set_defaults(func=cmd_sweep)

    blocks = sub.add_parser("blocks", help="print a building-block array")
    blocks.add_argument("kind", choices=("latin", "kotzig", "sfd"))
    blocks.add_argument("--n", type=int, required=True)
    blocks.add_argument("--d", type=int, help="row count for kotzig")
    blocks.add_argument("--t", type=int, help="row count for sfd")
    blocks.add_argument("--l", type=int, default=0, help="offset for sfd")
    blocks.add_argument(
        "--format", choices=("json", "csv", "pretty"), default="pretty"
    )
    blocks.add_argument("--out", help="output path (default: stdout)")
    blocks.set_defaults(func=cmd_blocks)

    srch = sub.add_parser("search", help="run the backtracking oracle")
    srch.add_argument("--n", type=int, required=True)
    srch.add_argument("--d", type=int, required=True)
    srch.add_argument("--mode", choices=("find_one", "exhaust"), default="find_one")
    srch.add_argument("--time-budget", type=float, help="seconds")
    srch.add_argument("--node-limit", type=int)
    srch.add_argument(
        "--randomize", action="store_true", help="shuffle the exploration order"
    )
    srch.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
