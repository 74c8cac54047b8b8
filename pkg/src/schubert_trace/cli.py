"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 an oracle check failed,
3 a check was skipped at the enumeration cap and ``--strict`` was given.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import __version__
from .determinantal_analysis import det_report
from .errors import InputError, SchubertTraceError
from .minor_poset import Ambient, BiMinor, SchubertIndex
from .oracle import enumeration_cap, full_sweep
from .reporting import determinantal_json, dumps, report_text, schubert_json, verify_json, verify_text
from .schubert_analysis import BaseRingAssumptions, schubert_report

EXIT_OK, EXIT_INPUT, EXIT_ORACLE, EXIT_CAP = 0, 1, 2, 3

_TUPLE = re.compile(r"^[0-9]+(,[0-9]+)*$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_tuple(text: str) -> tuple[int, ...]:
    if not _TUPLE.match(text):
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers without spaces, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _base(args) -> BaseRingAssumptions:
    ctr = None if args.base_ctr is None else args.base_ctr == "yes"
    if args.base == "gorenstein":
        return BaseRingAssumptions(gorenstein_normal_domain=True, reduced_cm_with_canonical=False, base_is_ctr=ctr)
    return BaseRingAssumptions(gorenstein_normal_domain=False, reduced_cm_with_canonical=True, base_is_ctr=ctr)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubert-trace", description="Canonical trace of Schubert cycles and determinantal rings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--m", type=_positive, required=True, help="row count")
        sp.add_argument("--n", type=_positive, required=True, help="column count")
        sp.add_argument("--base", choices=["gorenstein", "reduced-cm"], default="gorenstein")
        sp.add_argument("--base-ctr", choices=["yes", "no"], default=None, help="required with --base reduced-cm")
        sp.add_argument("--format", choices=["json", "text"], default="json")

    s = sub.add_parser("analyze-schubert", help="analyze G(X; gamma)")
    common(s)
    s.add_argument("--gamma", type=parse_tuple, required=True, help="columns, e.g. 1,3,4,7")

    d = sub.add_parser("analyze-determinantal", help="analyze R(X; delta)")
    common(d)
    d.add_argument("--rows", type=parse_tuple, required=True)
    d.add_argument("--cols", type=parse_tuple, required=True)
    d.add_argument("--degree-cap", type=_positive, default=None, help="interval size up to which generator degrees are enumerated")

    v = sub.add_parser("verify", help="run every oracle suite over small ambients")
    v.add_argument("--max-m", type=_positive, default=3)
    v.add_argument("--max-n", type=_positive, default=7)
    v.add_argument("--det-max-m", type=_positive, default=None, help="row bound for minor sweeps (default --max-m)")
    v.add_argument("--det-max-n", type=_positive, default=None, help="column bound for minor sweeps (default --max-n)")
    v.add_argument("--trials", type=_positive, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bound", type=_positive, default=100, help="pattern matrix entries lie in [1, bound]")
    v.add_argument("--cap", type=_positive, default=None, help="enumeration cap (default $SCHUBERT_TRACE_CAP or 200000)")
    v.add_argument("--strict", action="store_true", help="exit 3 when any check hits the cap")
    v.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    v.add_argument("--format", choices=["json", "text"], default="json")
    return p


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze-schubert":
            gamma = SchubertIndex(args.gamma, Ambient(args.m, args.n))
            d = schubert_json(schubert_report(gamma, _base(args)))
            _emit(dumps(d) if args.format == "json" else report_text(d))
            return EXIT_OK
        if args.command == "analyze-determinantal":
            delta = BiMinor(args.rows, args.cols, Ambient(args.m, args.n))
            d = determinantal_json(det_report(delta, _base(args), cap=args.degree_cap))
            _emit(dumps(d) if args.format == "json" else report_text(d))
            return EXIT_OK
        cap = enumeration_cap() if args.cap is None else args.cap
        suites = full_sweep(
            args.max_m,
            args.max_n,
            trials=args.trials,
            seed=args.seed,
            bound=args.bound,
            cap=cap,
            det_max_m=args.det_max_m,
            det_max_n=args.det_max_n,
        )
        params = {
            "max_m": args.max_m,
            "max_n": args.max_n,
            "det_max_m": args.det_max_m or args.max_m,
            "det_max_n": args.det_max_n or args.max_n,
            "trials": args.trials,
            "seed": args.seed,
            "bound": args.bound,
            "cap": cap,
            "strict": args.strict,
            "timings": args.timings,
        }
        d = verify_json(params, suites)
        _emit(dumps(d) if args.format == "json" else verify_text(d))
        if not all(s.ok for s in suites):
            return EXIT_ORACLE
        if args.strict and any(s.skipped_cap for s in suites):
            return EXIT_CAP
        return EXIT_OK
    except InputError as exc:
        print(f"schubert-trace: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SchubertTraceError as exc:
        print(f"schubert-trace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ORACLE


def main() -> None:
    sys.exit(run())
