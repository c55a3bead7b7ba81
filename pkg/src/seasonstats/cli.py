"""Command-line interface: analyze one journal's monthly event data.

Exit codes: 0 on success, 1 on validation problems (arguments or data),
2 on I/O problems (unreadable input, unwritable output).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .ingest import DataError, aggregate, matrices_from_counts, parse_counts, parse_events
from .report import FORMATS, AnalysisOptions, build_bundle, render

_EXTENSIONS = {"csv": "csv", "json": "json", "md": "md"}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; validation errors are exit 1 here
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_years(text: str) -> tuple:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            first = last = int(parts[0])
        elif len(parts) == 2:
            first, last = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise DataError(f"invalid year range {text!r}, expected y0:y1") from None
    if last < first:
        raise DataError(f"invalid year range {text!r}: end before start")
    return tuple(range(first, last + 1))

def _parse_orders(text: str) -> tuple:
    try:
        orders = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise DataError(f"invalid diversity orders {text!r}, expected a comma list") from None
    if not orders:
        raise DataError("at least one diversity order is required")
    return orders


def build_parser() -> _Parser:
    parser = _Parser(prog="analyze",
                     description="Seasonal analysis of monthly submission and acceptance counts.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--input", required=True, help="input CSV path")
    parser.add_argument("--format", required=True, choices=("events", "counts"),
                        help="input shape: event rows or pre-aggregated counts")
    parser.add_argument("--journal", required=True, help="journal label to select")
    parser.add_argument("--years", default=None,
                        help="inclusive year range y0:y1 (default: all years present)")
    parser.add_argument("--q", default="1,2",
                        help="comma list of Hill diversity orders (default 1,2)")
    parser.add_argument("--precision", type=int, default=5,
                        help="decimal places in rendered tables (default 5)")
    parser.add_argument("--emit", default="csv", choices=FORMATS,
                        help="output document format (default csv)")
    parser.add_argument("--out", default=".", help="output directory (default: current)")
    parser.add_argument("--t-null", type=float, default=0.0833333, dest="t_null",
                        help="hypothesized mean for the t rows (default 1/12)")
    parser.add_argument("--z-sigma", type=float, default=None, dest="z_sigma",
                        help="known sigma for the z rows (needs --z-null)")
    parser.add_argument("--z-null", type=float, default=None, dest="z_null",
                        help="hypothesized mean for the z rows (needs --z-sigma)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        with open(args.input, encoding="utf-8", newline="") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        print(f"analyze: cannot read input: {exc}", file=sys.stderr)
        return 2

    try:
        years = None if args.years is None else _parse_years(args.years)
        if args.format == "events":
            events = parse_events(lines)
            if years is None:
                mine = [e.submitted_at.year for e in events if e.journal == args.journal]
                if not mine:
                    raise DataError(f"empty selection: no rows for journal {args.journal!r}")
                years = tuple(range(min(mine), max(mine) + 1))
            submitted, accepted = aggregate(events, args.journal, years)
        else:
            rows = parse_counts(lines)
            submitted, accepted = matrices_from_counts(rows, args.journal, years)
        options = AnalysisOptions(
            q_orders=_parse_orders(args.q),
            precision=args.precision,
            t_null=args.t_null,
            z_sigma=args.z_sigma,
            z_null=args.z_null,
        )
        bundle = build_bundle(submitted, accepted, options, journal=args.journal)
        documents = render(bundle, args.emit, args.precision)
    except DataError as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 1

    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for doc in documents:
            (out_dir / f"{doc.name}.{_EXTENSIONS[args.emit]}").write_text(
                doc.text, encoding="utf-8")
    except OSError as exc:
        print(f"analyze: cannot write output: {exc}", file=sys.stderr)
        return 2

    print(f"wrote {len(documents)} documents to {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
