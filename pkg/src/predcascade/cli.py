"""Command-line entry point.

Exit codes: 0 success, 1 lower-bound check violated, 2 bad input or
arguments, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import serialize
from .bench import bench_csv, run_bench
from .core import ArrayCollection, QueryKind
from .index import build
from .lowerbound_lab import (
    DEFAULT_BUDGET,
    SwapClassInstance,
    balanced_sizes,
    row_for,
    table_csv,
)

EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class InstanceParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_instance(text: str) -> ArrayCollection:
    """One array per line, space-separated base-10 integers; blank line = empty array."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InstanceParseError(1, "no arrays in input")
    arrays = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r")
        try:
            arr = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise InstanceParseError(lineno, f"not an integer: {exc}") from None
        for pos in range(1, len(arr)):
            if arr[pos] < arr[pos - 1]:
                raise InstanceParseError(
                    lineno, f"values not sorted at position {pos} ({arr[pos - 1]} > {arr[pos]})"
                )
        arrays.append(arr)
    return ArrayCollection(arrays, check=False)


def format_instance(c: ArrayCollection) -> str:
    return "".join(" ".join(map(str, arr)) + "\n" for arr in c.arrays)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, data, binary: bool = False) -> None:
    try:
        with open(path, "wb" if binary else "w", encoding=None if binary else "utf-8") as fh:
            fh.write(data)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def cmd_build(args) -> int:
    if args.group_size is not None and args.group_size < 1:
        raise _Fail(EXIT_USAGE, "group size must be ≥ 1")
    try:
        c = parse_instance(_read_text(args.input))
    except InstanceParseError as exc:
        raise _Fail(EXIT_USAGE, f"{args.input}: {exc}") from None
    ix = build(c, args.group_size)
    try:
        data = serialize.dumps(ix)
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, str(exc)) from None
    _write(args.out, data, binary=True)
    print(
        f"n={ix.n} k={ix.k} s={ix.s} t={ix.t} "
        f"comparisons={ix.build_stats.comparisons} ms={ix.build_stats.seconds * 1e3:.3f}"
    )
    return 0


def cmd_query(args) -> int:
    try:
        with open(args.index, "rb") as fh:
            ix = serialize.load(fh)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {args.index}: {exc.strerror}") from None
    except serialize.FormatError as exc:
        raise _Fail(EXIT_IO, f"{args.index}: {exc}") from None
    kind = QueryKind.STRICT if args.strict else QueryKind.NON_STRICT
    for q in args.q:
        ans = ix.query(q, kind)
        if ans.absent:
            print(f"{q} ABSENT -:-")
        else:
            print(f"{q} {ans.value} {ans.source[0]}:{ans.source[1]}")
    return 0


def cmd_bench(args) -> int:
    if args.n < 1 or args.k < 1:
        raise _Fail(EXIT_USAGE, "--n and --k must be ≥ 1")
    rows = run_bench(
        args.n, args.k, seed=args.seed, sweep=args.sweep_s,
        num_queries=args.queries, timing=args.timing,
    )
    _write(args.csv, bench_csv(rows))
    return 0


def _parse_sizes(text: str) -> List[int]:
    try:
        sizes = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise _Fail(EXIT_USAGE, f"bad --sizes list: {text!r}") from None
    if not sizes or any(s < 0 for s in sizes):
        raise _Fail(EXIT_USAGE, "--sizes needs non-negative counts")
    return sizes


def cmd_classes(args) -> int:
    if args.block < 1 or args.n < 0 or min(args.k) < 1:
        raise _Fail(EXIT_USAGE, "--block and --k must be ≥ 1, --n ≥ 0")
    if args.n > DEFAULT_BUDGET:
        raise _Fail(EXIT_USAGE, f"n={args.n} exceeds the enumeration budget {DEFAULT_BUDGET}")
    if args.sizes is not None:
        sizes = _parse_sizes(args.sizes)
        if len(args.k) != 1 or len(sizes) != args.k[0] or sum(sizes) != args.n:
            raise _Fail(EXIT_USAGE, "--sizes must list k counts summing to n")
        instances = [SwapClassInstance(tuple(sizes), args.block)]
    else:
        instances = [SwapClassInstance(balanced_sizes(args.n, k), args.block) for k in args.k]
    rows = []
    violated = False
    for inst in instances:
        row, report = row_for(inst)
        violated |= not report.holds
        rows.append(row)
    text = table_csv(rows)
    if args.csv:
        _write(args.csv, text)
    else:
        sys.stdout.write(text)
    if violated:
        print("BOUND VIOLATED", file=sys.stderr)
        return EXIT_VIOLATED
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="predcascade",
        description="Predecessor search over k sorted arrays via grouped merging "
        "and fractional cascading.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index from an instance file")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--group-size", type=int, metavar="S", help="override the chosen group size")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="answer predecessor queries from an index file")
    p.add_argument("--index", required=True, metavar="FILE")
    p.add_argument("--q", required=True, nargs="+", type=int, metavar="VALUE")
    p.add_argument("--strict", action="store_true", help="strict predecessor (< q)")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("bench", help="measure build and query comparisons to CSV")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--sweep-s", action="store_true", help="one row per s in 1, 2, 4, ..., k")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queries", type=int, default=10_000, help=argparse.SUPPRESS)
    p.add_argument(
        "--timing",
        action="store_true",
        help="fill build_ms and mean_query_ns (makes the CSV run-dependent)",
    )
    p.add_argument("--csv", required=True, metavar="FILE")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("classes", help="count swap-equivalence classes (lower-bound lab)")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int, nargs="+", help="one table row per value")
    p.add_argument("--block", required=True, type=int, metavar="B")
    p.add_argument("--sizes", metavar="LIST", help="comma-separated array sizes")
    p.add_argument("--csv", metavar="FILE", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_classes)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
