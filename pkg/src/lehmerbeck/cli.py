"""Command-line entry point: ``lehmerbeck {check,table,series,witness}``.

Exit status is 0 on success, 1 when a check or a table comparison fails and
2 on invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .ids import TheoremId
from .identities import (
    BudgetExceeded,
    check,
    negative_coefficient_table,
    witnesses,
)
from .partitions import ResidueSpec
from .series import (
    DEFAULT_ORDER,
    GEN_NAMES,
    NAMED_SERIES,
    GenSpec,
    build_generating_jet,
    derivative_difference,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_set(text: Optional[str]) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"not a comma-separated list of integers: {text!r}") from None


def residue_spec(args: argparse.Namespace) -> Optional[ResidueSpec]:
    """Build the residue configuration from --r/--set/--L/--O/--ell."""
    r = args.r
    given = [x for x in (args.set, args.L, args.O) if x] or ([str(args.ell)] if args.ell else [])
    if args.ell is not None and (args.set or args.L or args.O):
        raise UsageError("--ell cannot be combined with --set/--L/--O")
    if r is None and not given:
        return None
    r = 1 if r is None else r
    if r < 1:
        raise UsageError("--r must be >= 1")
    try:
        if args.set or args.ell is not None:
            ells = _int_set(args.set) if args.set else [args.ell]
            spec = ResidueSpec.from_residues(r, ells)
            return ResidueSpec(r, spec.L | set(_int_set(args.L)), spec.O | set(_int_set(args.O)))
        return ResidueSpec(r, _int_set(args.L), _int_set(args.O))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_thm(text: str) -> TheoremId:
    try:
        return TheoremId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- commands ------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    thm = _parse_thm(args.thm)
    if args.nmax < 0:
        raise UsageError("--nmax must be non-negative")
    if args.nmin < 0 or args.nmin > args.nmax:
        raise UsageError("--nmin must lie in 0..nmax")
    params = residue_spec(args)
    try:
        report = check(thm, args.nmax, params, n_min=args.nmin, amended=args.amended)
    except (BudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out = json.dumps(report.to_dict(), indent=2) + "\n"
    elif args.format == "csv":
        out = _csv(
            [[r.n, r.lhs, r.rhs, "" if r.series is None else r.series, str(r.ok).lower(), r.note]
             for r in report.rows],
            ["n", "lhs", "rhs", "series", "ok", "note"],
        )
    else:
        lines = [f"{report.thm} {json.dumps(report.params)}"]
        for r in report.rows:
            s = "-" if r.series is None else r.series
            mark = "ok" if r.ok else "FAIL"
            lines.append(f"n={r.n:<3d} lhs={r.lhs} rhs={r.rhs} series={s} {mark}" + (f"  ({r.note})" if r.note else ""))
        lines.append(f"{len(report.rows) - len(report.failures)}/{len(report.rows)} rows pass")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _fmt_set(ns) -> str:
    return "{" + ";".join(str(n) for n in sorted(ns)) + "}" if ns else "∅"


def cmd_table(args: argparse.Namespace) -> int:
    if args.rmax < 1:
        raise UsageError("--rmax must be >= 1")
    if args.nmax < 20:
        raise UsageError("--nmax must be at least 20")
    rows = negative_coefficient_table(args.rmax, args.nmax)
    if args.format == "json":
        data = [
            {"r": t.r, "n": sorted(t.negatives), "values": [t.negatives[n] for n in sorted(t.negatives)],
             "expected": sorted(t.expected), "match": t.ok}
            for t in rows
        ]
        out = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        out = _csv([[t.r, _fmt_set(t.negatives)] for t in rows], ["r", "n"])
    else:
        lines = []
        for t in rows:
            line = f"r={t.r:<3d} {_fmt_set(t.negatives)}"
            if args.compare_paper:
                line += "  matches" if t.ok else f"  MISMATCH (expected {_fmt_set(t.expected)})"
            lines.append(line)
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    if args.compare_paper and not all(t.ok for t in rows):
        return EXIT_FAIL
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    N = args.N
    if N < 0:
        raise UsageError("--N must be non-negative")
    if (args.name is None) == (args.thm is None):
        raise UsageError("give exactly one of --name or --thm")
    try:
        if args.thm is not None:
            s = derivative_difference(_parse_thm(args.thm), residue_spec(args), max(N, 1))
        elif args.name in NAMED_SERIES:
            s = NAMED_SERIES[args.name](N)
        elif args.name in GEN_NAMES:
            jet = build_generating_jet(GenSpec(args.name, residue_spec(args)), N)
            s = jet.deriv if args.deriv else jet.value
        else:
            names = ", ".join(sorted(NAMED_SERIES) + list(GEN_NAMES))
            raise UsageError(f"unknown series {args.name!r}; known: {names}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coeffs = list(s.coeffs[: N + 1])
    if args.format == "csv":
        out = _csv([[n, c] for n, c in enumerate(coeffs)], ["n", "coeff"])
    elif args.format == "text":
        out = " ".join(map(str, coeffs)) + "\n"
    else:
        out = json.dumps(coeffs, separators=(",", ":")) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    thm = _parse_thm(args.thm)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    try:
        objs = witnesses(thm, args.n, residue_spec(args), amended=args.amended)
    except (BudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    lines = [str(o) for o in objs]
    if args.format == "json":
        sys.stdout.write(json.dumps(lines) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv([[x] for x in lines], ["object"]))
    else:
        sys.stdout.write("".join(x + "\n" for x in lines))
    return EXIT_OK


# --- parser ----------------------------------------------------------------------------


def _residue_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("residue classes")
    g.add_argument("--r", type=int, default=None, help="modulus parameter (classes are mod 2r)")
    g.add_argument("--set", default=None, help="residue set, e.g. 2,4 (split into even L and odd O)")
    g.add_argument("--L", default=None, help="even residues")
    g.add_argument("--O", default=None, help="odd residues")
    g.add_argument("--ell", type=int, default=None, help="single residue, same as --set ELL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lehmerbeck",
        description="Exact checks of Lehmer's identity and its Beck-type companions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("json", "csv", "text")

    c = sub.add_parser("check", help="compare both sides and the series for 0..nmax")
    c.add_argument("--thm", required=True)
    c.add_argument("--nmax", type=int, required=True)
    c.add_argument("--nmin", type=int, default=0)
    c.add_argument("--amended", action="store_true", help="use the relaxed gap condition for pair sets")
    c.add_argument("--format", choices=formats, default="text")
    _residue_args(c)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("table", help="negative coefficients of the ell = 2 series by r")
    t.add_argument("--rmax", type=int, default=12)
    t.add_argument("--nmax", type=int, default=60)
    t.add_argument("--compare-paper", action="store_true", help="exit 1 unless the published table is reproduced")
    t.add_argument("--format", choices=formats, default="text")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("series", help="dump coefficients c_0..c_N")
    s.add_argument("--name", default=None)
    s.add_argument("--thm", default=None)
    s.add_argument("--N", type=int, default=DEFAULT_ORDER)
    s.add_argument("--deriv", action="store_true", help="for a generating function: the z-derivative at z = 1")
    s.add_argument("--format", choices=formats, default="json")
    _residue_args(s)
    s.set_defaults(func=cmd_series)

    w = sub.add_parser("witness", help="list the objects counted by the right-hand side")
    w.add_argument("--thm", required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--amended", action="store_true")
    w.add_argument("--format", choices=formats, default="text")
    _residue_args(w)
    w.set_defaults(func=cmd_witness)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lehmerbeck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
