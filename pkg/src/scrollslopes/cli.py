"""Command-line front end.

Modes
-----
* ``--genus N``                 full single-genus report
* ``--verify --genus N``        inequality suite for one genus
* ``--sweep LO..HI``            per-genus verdict rows (with or without --verify)
* ``--oracle N [--seed S]``     cross-check the independent oracles

Exit codes: 0 all checks pass, 1 a mathematical check failed (the failing
inequality is printed exactly), 2 invalid request.  Documents go to
stdout, diagnostics to stderr.  Rationals are printed as exact "p/q"
strings in every format; no environment variables are consulted.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .report import (
    ReportDocument,
    document_for_genus,
    document_for_oracle,
    document_for_sweep,
    render,
)

USAGE = (
    "scrollslopes (--genus N [--verify] [--twists A1,A2,A3] [--betti B1,B2]"
    " | --sweep LO..HI [--verify] | --oracle N [--seed S])"
    " [--format text|json|csv] [--corrupt-degree]"
)


class UsageError(Exception):
    pass


@dataclass
class ReportRequest:
    mode: str  # report | verify | sweep | oracle
    genus: int | None = None
    lo: int | None = None
    hi: int | None = None
    twists: tuple[int, int, int] | None = None
    betti: tuple[int, int] | None = None
    fmt: str = "text"
    samples: int | None = None
    seed: int = 42
    corrupt_degree: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollslopes",
        usage=USAGE,
        description=(
            "Exact verification of Harder-Narasimhan filtrations of normal "
            "bundles of tetragonal canonical curves."
        ),
    )
    parser.add_argument("--genus", type=int, help="genus of the curve (>= 6)")
    parser.add_argument("--sweep", metavar="LO..HI", help="verify a whole genus range")
    parser.add_argument("--twists", metavar="A1,A2,A3", help="override the scroll twists")
    parser.add_argument("--betti", metavar="B1,B2", help="override the syzygy degrees")
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--verify", action="store_true", help="run the inequality suite only")
    parser.add_argument("--oracle", type=int, metavar="N", help="cross-check N random cases")
    parser.add_argument("--seed", type=int, default=None, help="oracle RNG seed (default 42)")
    parser.add_argument(
        "--corrupt-degree",
        action="store_true",
        help="fault-injection hook: corrupt one computed degree to exercise the failure path",
    )
    return parser


def _parse_int_tuple(text: str, expected_len: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}")
    if len(values) != expected_len:
        raise UsageError(f"{what} needs exactly {expected_len} entries, got {len(values)}")
    return values


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"sweep range must look like LO..HI, got {text!r}")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"sweep range must look like LO..HI, got {text!r}")
    if not 6 <= lo_i <= hi_i:
        raise UsageError(f"sweep range needs 6 <= LO <= HI, got {text!r}")
    return lo_i, hi_i


def validate_request(args: argparse.Namespace) -> ReportRequest:
    if args.oracle is not None:
        for flag, name in (
            (args.genus, "--genus"),
            (args.sweep, "--sweep"),
            (args.twists, "--twists"),
            (args.betti, "--betti"),
        ):
            if flag is not None:
                raise UsageError(f"--oracle conflicts with {name}")
        if args.verify:
            raise UsageError("--oracle conflicts with --verify")
        if args.oracle < 1:
            raise UsageError("--oracle needs a sample count >= 1")
        return ReportRequest(
            mode="oracle",
            samples=args.oracle,
            seed=42 if args.seed is None else args.seed,
            fmt=args.fmt,
        )

    if args.seed is not None:
        raise UsageError("--seed only applies to --oracle")

    if args.sweep is not None:
        for flag, name in (
            (args.genus, "--genus"),
            (args.twists, "--twists"),
            (args.betti, "--betti"),
        ):
            if flag is not None:
                raise UsageError(f"--sweep conflicts with {name}")
        lo, hi = _parse_range(args.sweep)
        return ReportRequest(
            mode="sweep", lo=lo, hi=hi, fmt=args.fmt, corrupt_degree=args.corrupt_degree
        )

    if args.genus is None:
        raise UsageError("one of --genus, --sweep, or --oracle is required")

    twists = _parse_int_tuple(args.twists, 3, "--twists") if args.twists else None
    betti = _parse_int_tuple(args.betti, 2, "--betti") if args.betti else None
    return ReportRequest(
        mode="verify" if args.verify else "report",
        genus=args.genus,
        twists=twists,
        betti=betti,
        fmt=args.fmt,
        corrupt_degree=args.corrupt_degree,
    )


def execute(request: ReportRequest) -> ReportDocument:
    if request.mode == "oracle":
        return document_for_oracle(request.samples, request.seed)
    if request.mode == "sweep":
        return document_for_sweep(request.lo, request.hi, corrupt_degree=request.corrupt_degree)
    return document_for_genus(
        request.genus,
        mode=request.mode,
        twists=request.twists,
        betti=request.betti,
        corrupt_degree=request.corrupt_degree,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; normalize --help to success
        return int(exc.code or 0)

    try:
        request = validate_request(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"usage: {USAGE}", file=sys.stderr)
        return 2

    try:
        doc = execute(request)
    except ValueError as exc:
        # invalid mathematical input (bad genus, twist sums, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 2

    rendered = render(doc, request.fmt)
    sys.stdout.write(rendered if rendered.endswith("\n") else rendered + "\n")
    failures = doc.failed_check_lines()
    if failures:
        for line in failures:
            print(line, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
