"""Command-line entry point: ``anticomm verify|classify|lemmas|witness``."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import UnknownCatalogName
from .classifier import CharTwoRejected
from .groups import NotAGroup
from .harness import (
    DEFAULT_MAX_ORDER,
    IncompatiblePair,
    SweepConfig,
    exit_status,
    explain_instance,
    format_explanation,
    run_sweep,
    write_report,
)
from .involutions import NotAnInvolution
from .orientation import NotAnOrientation
from .rings import NotARing, UnknownRingToken

USAGE_ERRORS = (
    ValueError,
    KeyError,
    UnknownCatalogName,
    UnknownRingToken,
    NotAGroup,
    NotARing,
    NotAnInvolution,
    NotAnOrientation,
    IncompatiblePair,
    CharTwoRejected,
)


def _sweep_parser(sub, name: str, help_text: str) -> None:
    p = sub.add_parser(name, help=help_text)
    p.add_argument("--max-order", type=int, default=None,
                   help=f"sweep catalog groups up to this order (default {DEFAULT_MAX_ORDER} unless groups are given)")
    p.add_argument("--group", action="append", default=[], metavar="NAME", help="catalog group to include (repeatable)")
    p.add_argument("--group-file", action="append", default=[], metavar="PATH", help="JSON Cayley table (repeatable)")
    p.add_argument("--rings", default="z4", help="comma-separated ring tokens or JSON ring files")
    p.add_argument("--out", default=None, help="report path; summary goes to stdout either way")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--include-trivial-sigma", action="store_true")
    p.add_argument("--allow-order-32", action="store_true", help="raise the order cap from 16 to 32")
    p.set_defaults(mode=name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anticomm",
        description="Decide anticommutativity of symmetric elements in group rings, exhaustively.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _sweep_parser(sub, "verify", "direct check vs closed-form predicate")
    _sweep_parser(sub, "classify", "verify plus structure tags, restricted-case tags and IB3 diagnostics")
    _sweep_parser(sub, "lemmas", "classify plus the necessary-condition suite on holding instances")
    w = sub.add_parser("witness", help="explain a single instance")
    w.add_argument("--group", required=True, help="catalog name or JSON table file")
    w.add_argument("--ring", required=True, help="ring token or JSON ring file")
    w.add_argument("--involution", default="id", help="index, 'id', 'inv', or image list")
    w.add_argument("--orientation", default="0", help="index, JSON value list, or name=value pairs")
    w.add_argument("--json", action="store_true", help="print the record as JSON")
    return parser


def _run_sweep(args) -> int:
    max_order = args.max_order
    if max_order is None and not args.group and not args.group_file:
        max_order = DEFAULT_MAX_ORDER
    config = SweepConfig(
        max_order=max_order,
        group_names=list(args.group),
        group_files=list(args.group_file),
        rings=[r for r in args.rings.split(",") if r],
        mode=args.mode,
        out=args.out,
        fmt=args.fmt,
        jobs=args.jobs,
        include_trivial_sigma=args.include_trivial_sigma,
        allow_order_32=args.allow_order_32,
    )
    summary, records, timing = run_sweep(config)
    write_report(config, summary, records, timing)
    print(json.dumps(summary, sort_keys=True, indent=1))
    print(f"elapsed {timing['total_seconds']}s", file=sys.stderr)
    return exit_status(summary)


def _run_witness(args) -> int:
    detail = explain_instance(args.group, args.ring, args.involution, args.orientation)
    if args.json:
        print(json.dumps(detail, sort_keys=True, indent=1))
    else:
        print(format_explanation(detail))
    return 0 if detail["agreement"] else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "witness":
            return _run_witness(args)
        return _run_sweep(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
