"""Command line front end: compute, verify, enumerate, bound.

Graphs stream in as graph6 lines and results stream out as one JSON record
per line, so subcommands compose in shell pipelines.  Verification suites
write their report as JSON to the output and a human summary to stderr.
Exit codes: 0 pass, 2 violations found, 1 operational error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, TextIO

from .chromatic import chromatic_polynomial, count_colourings, tomescu_bound
from .graphs import chromatic_number, emit_graph6, parse_graph6
from .listcolor import ForbiddenAssignment, list_chromatic_polynomial
from .polynomials import polynomial_to_json
from .verify import (
    census_report,
    enumerate_connected,
    enumerate_graphs,
    smallest_triangle_free_4chromatic,
    verify_small_lemmas,
    verify_theorem_main,
)

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2


class _Parser(argparse.ArgumentParser):
    # Flag problems are operational errors: exit 1, reserving 2 for violations.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """Accept '4', '4..8', or '3,5,7'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    if "," in text:
        return sorted({int(part) for part in text.split(",")})
    return [int(text)]


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _dump(obj, out: TextIO) -> None:
    json.dump(obj, out, sort_keys=True, separators=(",", ":"))
    out.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chroma", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="per-graph computations on graph6 input")
    p_compute.add_argument("--input", "-i", default=None, help="graph6 file (default stdin)")
    p_compute.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    mode = p_compute.add_mutually_exclusive_group(required=True)
    mode.add_argument("--polynomial", action="store_true", help="chromatic polynomial in x")
    mode.add_argument("--count", action="store_true", help="number of colourings at --x")
    mode.add_argument(
        "--list-poly", action="store_true", help="forbidden-list polynomial in y"
    )
    p_compute.add_argument("--x", type=int, default=None, help="palette size for --count")
    p_compute.add_argument(
        "--forbidden", default=None, help="JSON forbidden-assignment file for --list-poly"
    )

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite", choices=["tomescu", "lemmas", "triangle-free", "census"]
    )
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--x", default="4..8", help="x values, e.g. 4..8")
    p_verify.add_argument("--y", default="3..6", help="y values, e.g. 3..6")
    p_verify.add_argument(
        "--workers", type=int, default=os.cpu_count() or 1,
        help="worker processes for the heavy suite (default: logical cores)",
    )
    p_verify.add_argument("--allow-long", action="store_true",
                          help="permit the multi-hour n = 10 enumerations")
    p_verify.add_argument("--output", "-o", default=None)

    p_enum = sub.add_parser("enumerate", help="stream one graph6 line per class")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--connected", action="store_true")
    p_enum.add_argument("--chi", type=int, default=None, help="keep this chromatic number")
    p_enum.add_argument("--allow-long", action="store_true")
    p_enum.add_argument("--output", "-o", default=None)

    p_bound = sub.add_parser("bound", help="print the clique-with-trees bound")
    p_bound.add_argument("--k", type=int, required=True)
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--x", type=int, required=True)

    return parser


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _cmd_compute(args) -> int:
    if args.count and args.x is None:
        print("chroma compute: --count requires --x", file=sys.stderr)
        return EXIT_ERROR
    if args.list_poly and args.forbidden is None:
        print("chroma compute: --list-poly requires --forbidden", file=sys.stderr)
        return EXIT_ERROR
    forbidden = None
    if args.forbidden is not None:
        with open(args.forbidden, "r", encoding="ascii") as fh:
            forbidden = ForbiddenAssignment.from_json(json.load(fh))
    if args.input is None or args.input == "-":
        lines = sys.stdin
        close_in = False
    else:
        lines = open(args.input, "r", encoding="ascii")
        close_in = True
    out, close_out = _open_output(args.output)
    failures = 0
    try:
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
                if args.polynomial:
                    record = {"graph6": line}
                    record.update(polynomial_to_json(chromatic_polynomial(g), "x"))
                elif args.count:
                    record = {
                        "graph6": line,
                        "x": args.x,
                        "count": str(count_colourings(g, args.x)),
                    }
                else:
                    record = {"graph6": line}
                    record.update(
                        polynomial_to_json(list_chromatic_polynomial(g, forbidden), "y")
                    )
                _dump(record, out)
            except (ValueError, ArithmeticError) as exc:
                failures += 1
                print(f"line {lineno}: {exc}", file=sys.stderr)
    finally:
        if close_in:
            lines.close()
        if close_out:
            out.close()
    return EXIT_ERROR if failures else EXIT_PASS


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    out, close_out = _open_output(args.output)
    try:
        if args.suite == "tomescu":
            nmax = args.nmax if args.nmax is not None else 8
            report = verify_theorem_main(nmax, parse_range(args.x), workers=args.workers)
            payload = report.to_dict()
            payload["suite"] = "tomescu"
            status = report.status
            print(report.summary(), file=sys.stderr)
        elif args.suite == "lemmas":
            sections = verify_small_lemmas(parse_range(args.y))
            payload = {
                "suite": "lemmas",
                "sections": {name: rep.to_dict() for name, rep in sections.items()},
            }
            status = (
                "pass" if all(rep.status == "pass" for rep in sections.values()) else "fail"
            )
            payload["status"] = status
            for name, rep in sections.items():
                print(f"{name}: {rep.summary()}", file=sys.stderr)
        elif args.suite == "triangle-free":
            nmax = args.nmax if args.nmax is not None else 9
            report = smallest_triangle_free_4chromatic(nmax, allow_long=args.allow_long)
            payload = report.to_dict()
            payload["suite"] = "triangle-free"
            status = report.status
            print(report.summary(), file=sys.stderr)
        else:
            nmax = args.nmax if args.nmax is not None else 7
            report = census_report(nmax)
            payload = report.to_dict()
            payload["suite"] = "census"
            status = report.status
            print(report.summary(), file=sys.stderr)
            for g6 in report.details["graphs"]:
                print(f"  {g6}", file=sys.stderr)
        _dump(payload, out)
    finally:
        if close_out:
            out.close()
    return EXIT_PASS if status == "pass" else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# enumerate / bound
# ---------------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    if args.connected:
        graphs: Iterable = enumerate_connected(args.n, allow_long=args.allow_long)
    else:
        graphs = enumerate_graphs(args.n, connected=False, allow_long=args.allow_long)
    out, close_out = _open_output(args.output)
    try:
        for g in graphs:
            if args.chi is not None and chromatic_number(g) != args.chi:
                continue
            out.write(emit_graph6(g) + "\n")
    finally:
        if close_out:
            out.close()
    return EXIT_PASS


def _cmd_bound(args) -> int:
    print(tomescu_bound(args.k, args.n, args.x))
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        return _cmd_bound(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"chroma: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
