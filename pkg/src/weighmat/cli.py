"""``weighmat`` command line.

Exit codes: 0 for a positive mathematical outcome, 1 for a negative one
(not a weighing matrix, classification error, no odd prime power), 2 for
usage and input-format errors.
"""
from __future__ import annotations

import argparse
import sys

from .classify import ClassificationError, classify_toeplitz_weighing
from .construct import NotOddPrimePower, negacyclic_conference
from .core import (FormatError, RowSpec, expand_circulant, expand_negacyclic, format_matrix,
                   gram_check, read_matrix)
from .search import CapExceeded, InfeasibleParameters, SearchOptions, search_circulant, search_negacyclic
from .survey import DEFAULT_MAX_N, conference_survey, format_table

PROG = "weighmat"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _rowspec(text):
    try:
        return RowSpec.parse(text)
    except FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    p = _Parser(prog=PROG, description="Circulant, negacyclic and constant-diagonal weighing matrices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check A A^T = k I for a matrix file")
    v.add_argument("file")

    c = sub.add_parser("classify", help="classify a constant-diagonal weighing matrix")
    c.add_argument("file")

    e = sub.add_parser("expand", help="print the matrix generated by a first row")
    e.add_argument("--kind", choices=("cw", "nw"), required=True)
    e.add_argument("--row", type=_rowspec, required=True)

    s = sub.add_parser("search", help="enumerate CW(n,k) or NW(n,k) first rows")
    s.add_argument("--kind", choices=("cw", "nw"), required=True)
    s.add_argument("--order", type=_positive, required=True)
    s.add_argument("--weight", type=_positive, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--canonical", action="store_true", help="one row per shift/negation orbit")
    s.add_argument("--limit", type=_positive)

    k = sub.add_parser("construct", help="build structured weighing matrices")
    ksub = k.add_subparsers(dest="family", required=True, parser_class=_Parser)
    conf = ksub.add_parser("conference", help="negacyclic conference matrix NW(q+1, q)")
    conf.add_argument("-q", type=_positive, required=True)

    sv = sub.add_parser("survey", help="existence table for constant-diagonal conference matrices")
    sv.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    return p


def _load(path):
    try:
        return read_matrix(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}")
    except (FormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}")


def _verify(args, out):
    A = _load(args.file)
    report = gram_check(A)
    if report.is_weighing:
        out.write(f"W({A.order},{report.weight})\n")
        return 0
    for (i, j), g in report.gram_defects:
        out.write(f"defect ({i},{j}) {g}\n")
    return 1


def _classify(args, out):
    A = _load(args.file)
    try:
        verdict = classify_toeplitz_weighing(A)
    except ClassificationError as exc:
        out.write(exc.code + "\n")
        return 1
    out.write(verdict.value + "\n")
    return 0


def _expand(args, out):
    A = expand_circulant(args.row) if args.kind == "cw" else expand_negacyclic(args.row)
    out.write(format_matrix(A))
    return 0


def _search(args, out):
    fn = search_circulant if args.kind == "cw" else search_negacyclic
    opts = SearchOptions(count_only=args.count_only, canonical_dedup=args.canonical, limit=args.limit)
    try:
        res = fn(args.order, args.weight, opts)
    except InfeasibleParameters as exc:
        raise UsageError(str(exc))
    if args.count_only:
        out.write(f"{res.count}\n")
    else:
        out.writelines(f"{r}\n" for r in res.rows)
    return 0


def _construct(args, out):
    try:
        w = negacyclic_conference(args.q)
    except NotOddPrimePower as exc:
        sys.stderr.write(f"{PROG}: NotOddPrimePower: {exc}\n")
        return 1
    out.write(format_matrix(w.matrix, [f"NW({w.q + 1},{w.q}) first_row={w.row}"]))
    return 0


def _survey(args, out):
    try:
        rows = conference_survey(args.max_n)
    except (CapExceeded, ValueError) as exc:
        raise UsageError(str(exc))
    out.write(format_table(rows))
    return 0


COMMANDS = {"verify": _verify, "classify": _classify, "expand": _expand,
            "search": _search, "construct": _construct, "survey": _survey}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"{PROG}: error: {exc}\n")
        return 2


def main():
    sys.exit(run())
