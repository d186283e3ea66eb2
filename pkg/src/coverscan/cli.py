"""Command-line entry point.

All coordinates in the JSON output are 0-based ``[row, col]``; candidate
sizes are ``[h, w]`` (height first).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import fileio
from .cover1d import cover_indicator
from .decide import covers_with, is_cover
from .grid import set_from_mask
from .minimize import METRICS, minimal_cover, prune_statistics
from .wang import minimal_wang_cover

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


def _emit(payload: dict, started: float) -> None:
    payload["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
    print(json.dumps(payload))


def _check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = fileio.load_image(args.text)
    if args.pattern is not None:
        pattern = fileio.load_image(args.pattern)
        h, w = pattern.shape
        decision = covers_with(text, pattern)
    else:
        h, w = args.dims
        if h < 1 or w < 1:
            raise fileio.ParseError(f"--dims must be positive, got {h} {w}")
        decision = is_cover(text, h, w)
    payload = {
        "covered": decision.covered,
        "witness": list(decision.witness) if decision.witness else None,
        "h": h,
        "w": w,
    }
    if decision.reason:
        payload["reason"] = decision.reason
    _emit(payload, started)
    return EXIT_OK if decision.covered else EXIT_NEGATIVE


def _mincover(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = fileio.load_image(args.text)
    report = minimal_cover(text, METRICS[args.metric], use_prune=not args.no_prune)
    payload = {
        "best": list(report.best),
        "eval": report.eval_value,
        "metric": report.metric,
        "candidates_checked": report.candidates_checked,
        "candidates_pruned": report.candidates_pruned,
        "mask": sorted([list(p) for p in set_from_mask(report.mask)]),
    }
    if args.stats:
        payload["prune_statistics"] = prune_statistics(text)
    _emit(payload, started)
    return EXIT_OK


def _covers1d(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    seq = args.string.split() if args.tokens else list(args.string)
    if not seq:
        raise fileio.ParseError("string must be non-empty")
    lengths = cover_indicator(seq).lengths()
    _emit({"length": len(seq), "covers": lengths, "minimal": lengths[0]}, started)
    return EXIT_OK


def _wang(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    _, tiling = fileio.load_wang(args.path)
    bad = tiling.violations()
    if args.action == "check":
        payload = {
            "valid": not bad,
            "rows": tiling.rows,
            "cols": tiling.cols,
            "violations": [str(v) for v in bad],
        }
        _emit(payload, started)
        for v in bad:
            print(f"{args.path}: {v}", file=sys.stderr)
        return EXIT_OK if not bad else EXIT_INPUT
    if bad:
        print(f"{args.path}: {bad[0]}", file=sys.stderr)
        return EXIT_INPUT
    rows, cols = minimal_wang_cover(tiling)
    _emit({"best": [rows, cols], "rows": tiling.rows, "cols": tiling.cols}, started)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverscan",
        description="Image covers: decide, minimise, and find Wang tiling periods. "
        "Coordinates are 0-based [row, col]; sizes are [h, w].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="does the top-left h x w block cover the text?")
    p.add_argument("text", help="grid file or plain PGM")
    p.add_argument("pattern", nargs="?", help="candidate cover file")
    p.add_argument("--dims", nargs=2, type=int, metavar=("H", "W"),
                   help="use the text's top-left H x W block as the candidate")
    p.set_defaults(func=_check)

    p = sub.add_parser("mincover", help="smallest cover under a size metric")
    p.add_argument("text", help="grid file or plain PGM")
    p.add_argument("--metric", choices=sorted(METRICS), default="area")
    p.add_argument("--no-prune", action="store_true", help="check every candidate")
    p.add_argument("--stats", action="store_true", help="include pruning statistics")
    p.set_defaults(func=_mincover)

    p = sub.add_parser("covers1d", help="all prefix covers of a string")
    p.add_argument("string")
    p.add_argument("--tokens", action="store_true",
                   help="split on whitespace instead of characters")
    p.set_defaults(func=_covers1d)

    p = sub.add_parser("wang", help="Wang tiling checks")
    p.add_argument("action", choices=["check", "mincover"])
    p.add_argument("path", help="Wang tiling file")
    p.set_defaults(func=_wang)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and (args.pattern is None) == (args.dims is None):
        parser.error("check needs exactly one of PATTERN or --dims")
    try:
        return args.func(args)
    except (fileio.ParseError, OSError, ValueError) as exc:
        print(f"coverscan: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
