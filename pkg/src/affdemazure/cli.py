"""Command-line front end: ``affdemazure {dim,char,crystal,verify}``.

Exit codes: 0 success, 1 check failure, 2 usage error or invalid input,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .affine_weyl import decompose_translation
from .char_ring import demazure_character, dimension, format_fraction, restrict_graded
from .path_crystal import DEFAULT_CAP, demazure_crystal, demazure_seed, to_dot
from .root_data import (
    ConfigurationError,
    PreconditionError,
    ResourceError,
    build_root_system,
    parse_type,
)
from .theorem_suite import CHECKS, format_reports, run_checks

log = logging.getLogger("affdemazure")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _coweight(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"coweight must be comma-separated integers, got {text!r}")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _setup(args):
    """Validate type and coweight together; returns the root system."""
    rs = build_root_system(*parse_type(args.type))
    if len(args.coweight) != rs.rank:
        raise ConfigurationError(
            f"coweight has {len(args.coweight)} coordinates but {rs.name} has rank {rs.rank}"
        )
    if any(m < 0 for m in args.coweight):
        raise PreconditionError(f"coweight {args.coweight} is not dominant")
    return rs


def cmd_dim(args):
    rs = _setup(args)
    chi = demazure_character(rs, args.level, args.coweight, tiebreak=args.tiebreak, cap=args.cap)
    print(dimension(chi))
    return EXIT_OK


def _graded_table(graded):
    rows = [("energy", "weight", "mult")]
    for line in graded.to_records().splitlines():
        rows.append(tuple(f.split("=", 1)[1] for f in line.split()))
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
    )


def cmd_char(args):
    rs = _setup(args)
    chi = demazure_character(rs, args.level, args.coweight, tiebreak=args.tiebreak, cap=args.cap)
    graded = restrict_graded(chi)
    print(_graded_table(graded) if args.format == "table" else graded.to_records())
    return EXIT_OK


def cmd_crystal(args):
    rs = _setup(args)
    element = decompose_translation(rs, args.coweight, tiebreak=args.tiebreak)
    seed = demazure_seed(rs, element, level=args.level)
    graph = demazure_crystal(rs, element, seed, cap=args.cap)
    log.info("crystal: %d vertices, %d edges", len(graph.vertices), len(graph.edges))
    if args.format == "records":
        for k, p in enumerate(graph.vertices):
            end = ",".join(format_fraction(a) for a in p.endpoint())
            print(f"vertex={k} endpoint={end}")
        for s, t, i in graph.edges:
            print(f"edge={s}->{t} label={i}")
    else:
        sys.stdout.write(to_dot(graph))
    return EXIT_OK


def cmd_verify(args):
    selected = list(args.ids)
    if args.checks:
        selected += [c for c in args.checks.split(",") if c]
    if not selected or "all" in selected:
        selected = list(CHECKS)
    unknown = [c for c in selected if c not in CHECKS]
    if unknown:
        raise ConfigurationError(
            f"unknown check id(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}"
        )
    # keep order stable and drop repeats
    selected = list(dict.fromkeys(selected))
    reports = run_checks(selected)
    fmt = "table" if args.format == "table" else "records"
    text = format_reports(reports, fmt=fmt)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    failed = [r for r in reports if not r.experimental and not r.overall]
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affdemazure",
        description="Demazure modules of level l in affine Kac-Moody algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def computation(name, handler, formats, default_format, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help="Cartan type token, e.g. C2")
        p.add_argument("--level", type=_positive_int, default=1)
        p.add_argument("--coweight", type=_coweight, required=True,
                       help="fundamental-coweight coordinates, e.g. 1,0")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP,
                       help="maximum number of character terms or crystal vertices")
        p.add_argument("--tiebreak", choices=("min", "max"), default="min",
                       help="wall chosen first during the alcove walk")
        p.add_argument("-v", "--verbose", action="count", default=0)
        p.set_defaults(handler=handler)

    computation("dim", cmd_dim, ("table", "records"), "table", "print the dimension")
    computation("char", cmd_char, ("table", "records"), "records",
                "print the energy-graded g-character")
    computation("crystal", cmd_crystal, ("dot", "records"), "dot",
                "print the Demazure path crystal")

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("ids", nargs="*", help=f"check ids or 'all' ({', '.join(CHECKS)})")
    v.add_argument("--checks", default="", help="comma-separated check ids")
    v.add_argument("--format", choices=("table", "records"), default="records")
    v.add_argument("-v", "--verbose", action="count", default=0)
    v.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.handler(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ConfigurationError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
