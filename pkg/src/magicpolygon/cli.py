"""Command line entry point.

Exit codes: 0 positive result, 1 negative mathematical result, 2 usage or
parse error.  Results go to stdout as one JSON document; progress and
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import document
from .construct import construct, range_partition_check
from .core import DomainError, NonexistenceError, verify
from .proofcheck import check_odd_contradiction
from .render import render_svg
from .search import CapExceeded, Mode, SearchConfig, enumerate_magic

OK, NEGATIVE, USAGE = 0, 1, 2


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _error(msg: str) -> None:
    print(f"magicpolygon: {msg}", file=sys.stderr)


def _write_text(path: str, text: str) -> bool:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        _error(f"cannot write {path}: {exc.strerror or exc}")
        return False
    return True


def _load(path: str):
    try:
        return document.read(path)
    except OSError as exc:
        _error(f"cannot read {path}: {exc.strerror or exc}")
    except document.DocumentError as exc:
        for problem in exc.problems:
            _error(f"{path}: {problem}")
    return None


def cmd_construct(args) -> int:
    try:
        labeling = construct(args.n)
    except NonexistenceError as exc:
        _error(str(exc))
        return NEGATIVE
    except DomainError as exc:
        _error(str(exc))
        return USAGE
    text = document.dumps(labeling)
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return OK
    return OK if _write_text(args.output, text) else USAGE


def cmd_verify(args) -> int:
    labeling = _load(args.input)
    if labeling is None:
        return USAGE
    report = verify(labeling)
    _emit(report.to_dict())
    return OK if report.is_magic else NEGATIVE


def cmd_enumerate(args) -> int:
    config = SearchConfig(
        mode=Mode(args.mode),
        up_to_symmetry=args.up_to_symmetry,
        solution_limit=args.limit,
        emit_solutions=args.emit,
        worker_count=args.workers,
        max_n=args.max_n,
    )
    try:
        result = enumerate_magic(args.n, config)
    except DomainError as exc:
        _error(str(exc))
        return USAGE
    print(f"wall time: {result.wall_time:.3f}s", file=sys.stderr)
    _emit(result.to_dict())
    return OK if result.total_count else NEGATIVE


def cmd_prove_odd(args) -> int:
    start = time.perf_counter()
    report = check_odd_contradiction(sweep_max=args.sweep_max, workers=args.workers)
    print(f"wall time: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    _emit(report.to_dict())
    return NEGATIVE if report.fatal else OK


def cmd_render(args) -> int:
    labeling = _load(args.input)
    if labeling is None:
        return USAGE
    svg = render_svg(labeling)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
        return OK
    return OK if _write_text(args.output, svg) else USAGE


def cmd_check_ranges(args) -> int:
    last = args.to if args.to is not None else args.n
    if last < args.n:
        _error("--to must not be below n")
        return USAGE
    reports = []
    try:
        for n in range(args.n, last + 1):
            if n % 2 == 0:
                reports.append(range_partition_check(n))
    except DomainError as exc:
        _error(str(exc))
        return USAGE
    if not reports:
        _error("no even n in the requested range")
        return USAGE
    if len(reports) == 1:
        _emit(reports[0].to_dict())
    else:
        failed = [r.n for r in reports if not r.passed]
        _emit({
            "range": [args.n, last],
            "checked": len(reports),
            "passed": not failed,
            "failed": failed,
        })
    return OK if all(r.passed for r in reports) else NEGATIVE


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magicpolygon", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a magic n-gon (even n)")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="count all magic n-gons")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PRUNED.value)
    p.add_argument("--up-to-symmetry", action="store_true",
                   help="break dihedral symmetry during the search")
    p.add_argument("--emit", action="store_true", help="include canonical solutions")
    p.add_argument("--limit", type=_non_negative, help="emit at most this many solutions")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive, help="override the search cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("prove-odd", help="check the odd-n row reduction argument")
    p.add_argument("--sweep-max", type=_non_negative, default=10_000,
                   help="numeric sweep over k = 1..K (0 skips it)")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_prove_odd)

    p = sub.add_parser("render", help="draw a labeling document as SVG")
    p.add_argument("input")
    p.add_argument("output", nargs="?", help="output path (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check-ranges", help="range partition check for even n >= 8")
    p.add_argument("n", type=int)
    p.add_argument("--to", type=int, help="check every even n up to this bound")
    p.set_defaults(func=cmd_check_ranges)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
