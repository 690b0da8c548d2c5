"""Command-line entry point.

Exit status: 0 on success, 2 when any theorem check reports a violation,
1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import __version__
from .errors import TrimetricError
from .graph import generate_family, parse_family_spec, parse_graph6, read_graphs, to_edge_list, to_graph6
from .graph.families import FAMILY_ARITY
from .metrics import distance_matrix, metrics_summary
from .report import FORMATS, GraphReport, render_report
from .theorems import Status, check_all, exhaustive_scan, ng_scan, resolve_ids, verify_family_formula
from .triameter import triameter

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"4-6"`` -> [4, 5, 6]; ``"4,6"`` -> [4, 6]; ``"7"`` -> [7]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                a, b = part.split("-", 1)
                lo, hi = int(a), int(b)
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A-B or comma list") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _default_workers() -> int:
    raw = os.environ.get("TRIMETRIC_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="graph6 file (one per line) or edge-list file")
    src.add_argument("--graph6", metavar="STRING", help="a single graph6 word")
    src.add_argument("--family", metavar="SPEC", help="family spec, e.g. path:10, grid:4,7, petersen")


def _add_output(p: argparse.ArgumentParser, default_format: str = "text") -> None:
    p.add_argument("--format", choices=FORMATS, default=default_format)
    p.add_argument("--output", metavar="FILE", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trimetric", description="Triameter and related graph invariants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="triameter, witness and metrics of input graphs")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("check", help="run theorem checks on input graphs")
    _add_input(p)
    p.add_argument("--ids", help="comma-separated theorem ids (default: all)")
    _add_output(p)

    p = sub.add_parser("scan", help="exhaustive theorem sweep over labeled graphs")
    p.add_argument("--orders", required=True, help="orders to scan, e.g. 4-6")
    p.add_argument("--ids", help="comma-separated theorem ids (default: all)")
    p.add_argument("--trees", action="store_true", help="scan labeled trees (Prüfer stream)")
    p.add_argument("--workers", type=_positive, default=None)
    p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    _add_output(p)

    p = sub.add_parser("ng-scan", help="complement-pair scan and exceptional family")
    p.add_argument("--n", type=int, required=True, choices=(5, 6, 7))
    p.add_argument("--workers", type=_positive, default=None)
    _add_output(p)

    p = sub.add_parser("family", help="generate a family graph or verify family formulas")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--family", metavar="SPEC", help="emit this graph (graph6; --edge-list for edges)")
    mode.add_argument("--verify", metavar="KIND", help="compare tr against the closed form")
    p.add_argument("--range", metavar="A-B", help="parameter range for --verify")
    p.add_argument("--edge-list", action="store_true", help="emit the edge-list format")
    _add_output(p)
    return parser


def _load_graphs(args) -> list:
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    if args.family is not None:
        return [generate_family(parse_family_spec(args.family))]
    return read_graphs(args.input)


def _ids(args):
    return None if not args.ids else resolve_ids(args.ids.split(","))


def _cmd_compute(args) -> tuple[str, int]:
    reports = []
    for g in _load_graphs(args):
        dm = distance_matrix(g)
        reports.append(GraphReport(g, triameter(g, dm), metrics_summary(g, dm)))
    return render_report(reports, args.format), EXIT_OK


def _cmd_check(args) -> tuple[str, int]:
    ids = _ids(args)
    reports = list(itertools.chain.from_iterable(check_all(g, ids) for g in _load_graphs(args)))
    violated = any(r.status is Status.VIOLATED for r in reports)
    return render_report(reports, args.format), EXIT_VIOLATION if violated else EXIT_OK


def _cmd_scan(args) -> tuple[str, int]:
    workers = args.workers or _default_workers()
    summary = exhaustive_scan(
        parse_range(args.orders), _ids(args), workers=workers,
        stream="trees" if args.trees else "connected",
    )
    code = EXIT_VIOLATION if summary.total_violations else EXIT_OK
    return render_report(summary, args.format, timing=args.timing), code


def _cmd_ng_scan(args) -> tuple[str, int]:
    result = ng_scan(args.n, workers=args.workers or _default_workers())
    return render_report(result, args.format), EXIT_OK


def _cmd_family(args) -> tuple[str, int]:
    if args.verify:
        kind = args.verify.strip().lower()
        if kind not in FAMILY_ARITY:
            raise UsageError(f"unknown family {kind!r}")
        arity = FAMILY_ARITY[kind]
        if arity == 0:
            params = [()]
        else:
            if not args.range:
                raise UsageError("--verify needs --range")
            values = parse_range(args.range)
            params = list(itertools.product(values, repeat=arity))
        rows = verify_family_formula(kind, params)
        code = EXIT_OK if all(r.match for r in rows) else EXIT_VIOLATION
        return render_report(rows, args.format), code
    g = generate_family(parse_family_spec(args.family))
    if args.edge_list:
        return to_edge_list(g), EXIT_OK
    if args.format == "json":
        body = {"family": args.family, "n": g.n, "graph6": to_graph6(g), "edges": g.edges()}
        return json.dumps(body, sort_keys=True, indent=2) + "\n", EXIT_OK
    return to_graph6(g) + "\n", EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "ng-scan": _cmd_ng_scan,
    "family": _cmd_family,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _COMMANDS[args.verb](args)
    except (TrimetricError, UsageError, OSError) as exc:
        print(f"trimetric {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
