"""Command-line front end: polynomials, tables, zeros, locus samples and graphs."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from ptchrom import graphs
from ptchrom.analysis import (
    BoundViolated,
    classify_region,
    locus_boundary_sample,
    render_svg,
    tutte_ratio,
    zero_report,
)
from ptchrom.exactmath import NoConvergence, Polynomial
from ptchrom.families import (
    FAMILY_NAMES,
    DenominatorNoCancel,
    UnknownFamily,
    catalogue_json,
    evaluate_form,
    f_polynomials,
    family_form,
    verify_structure_constraints,
)
from ptchrom.tables import TABLE_IDS, TableSpec, build_table, diff_tables, read_golden

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
POLY_FAMILIES = FAMILY_NAMES + ("F",)


class UsageError(Exception):
    pass


def _parse_m(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"--m must be comma-separated integers, got {text!r}") from exc


def family_polynomial(family: str, m: list[int], fixed: int | None = None) -> tuple[Polynomial, int]:
    """Polynomial and vertex count of one family member."""
    if family == "F":
        if len(m) != 1 or m[0] < 1:
            raise UsageError("F takes one parameter m >= 1")
        return f_polynomials(m[0])[-1], m[0] + 4
    try:
        f = family_form(family, fixed)
    except UnknownFamily as exc:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(POLY_FAMILIES)}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        return evaluate_form(f, m), f.n_vertices(m)
    except ValueError as exc:
        if isinstance(exc, DenominatorNoCancel):
            raise
        raise UsageError(str(exc)) from exc


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _num(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


def cmd_poly(args: argparse.Namespace) -> int:
    p, n = family_polynomial(args.family, _parse_m(args.m), args.fixed)
    if args.eval is not None:
        _write(f"{_num(p(Fraction(args.eval)))}\n", args.output)
        return EXIT_OK
    if args.format == "json":
        doc = {"family": args.family, "m": _parse_m(args.m), "n": n,
               "coefficients": [_num(c) for c in p.coeffs]}
        _write(json.dumps(doc) + "\n", args.output)
    elif args.format == "expanded":
        _write(p.format() + "\n", args.output)
    else:
        _write(p.format_factored() + "\n", args.output)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    spec = TableSpec(args.table_id)
    table = build_table(spec)
    if args.diff is not None:
        golden = read_golden(args.table_id, args.diff or None)
        bad = diff_tables(args.table_id, table, golden)
        for mm in bad:
            print(f"MISMATCH {args.table_id} row={mm.row} col={mm.column} got={mm.got} want={mm.want}")
        print(f"{args.table_id}: {len(golden.rows)} rows, {len(bad)} mismatches")
        return EXIT_MISMATCH if bad else EXIT_OK
    if args.format == "json":
        _write(json.dumps(table.to_records(), indent=2, ensure_ascii=False) + "\n", args.output)
    else:
        _write(table.to_csv(), args.output)
    return EXIT_OK


def cmd_zeros(args: argparse.Namespace) -> int:
    p, n = family_polynomial(args.family, _parse_m(args.m), args.fixed)
    rep = zero_report(p, n)
    doc = {
        "family": args.family,
        "m": _parse_m(args.m),
        "n": n,
        "q_z": rep.q_z,
        "q_z_offset": rep.q_z_offset,
        "q_z_prime": rep.q_z_prime,
        "conjugate_pair": None if rep.complex_pair is None
        else [rep.complex_pair.re, rep.complex_pair.im],
        "real_zeros_in_window": rep.all_real_zeros,
    }
    if args.complex:
        doc["all_roots"] = [[r.re, r.im] for r in rep.complex_roots]
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    p, n = family_polynomial(args.family, _parse_m(args.m), args.fixed)
    rep = tutte_ratio(p, n)
    _write(f"n={n} P(tau+1)={rep.P_at_tau1} r={rep.r_exact} ({rep.r_float:.10f})\n", args.output)
    return EXIT_OK


def cmd_locus(args: argparse.Namespace) -> int:
    if args.count < 16:
        raise UsageError("--count must be at least 16")
    pts = locus_boundary_sample(args.count)
    for pt in pts:
        if classify_region(pt.q) is not pt.tag:
            raise BoundViolated(f"sample {pt.q} classified as {classify_region(pt.q)}")
    if args.format == "svg":
        _write(render_svg(pts), args.output)
    else:
        lines = ["re,im,tag"] + [f"{p.q.real:.12f},{p.q.imag:.12f},{p.tag.value}" for p in pts]
        _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_catalogue(args: argparse.Namespace) -> int:
    _write(catalogue_json() + "\n", args.output)
    return EXIT_OK


def cmd_constraints(args: argparse.Namespace) -> int:
    try:
        f = family_form(args.family, args.fixed)
    except (UnknownFamily, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    rep = verify_structure_constraints(f)
    _write("\n".join(rep.lines()) + "\n", args.output)
    return EXIT_OK if rep.ok else EXIT_INVARIANT


_GRAPHS = {
    "B": graphs.make_bipyramid,
    "R": graphs.make_r,
    "TC": graphs.make_tc_strip,
    "I": graphs.make_iterated_icosahedra,
    "K": graphs.make_complete,
    "C": graphs.make_cycle,
    "W": graphs.make_wheel,
}


def cmd_graph(args: argparse.Namespace) -> int:
    try:
        g = _GRAPHS[args.family](args.m)
    except graphs.BadParameter as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "dot":
        _write(g.to_dot(), args.output)
    elif args.format == "json":
        doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
        _write(json.dumps(doc) + "\n", args.output)
    else:
        _write(g.to_edge_list(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ptchrom", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def member(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, help=f"one of {', '.join(POLY_FAMILIES)}")
        p.add_argument("--m", required=True, help="parameter vector, e.g. 4 or 2,3")
        p.add_argument("--fixed", type=int, default=None,
                       help="held parameter for D_fixed_m2, D_fixed_m1, S_fixed")
        p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("poly", help="chromatic polynomial of a family member")
    member(p)
    p.add_argument("--format", choices=("factored", "expanded", "json"), default="factored")
    p.add_argument("--eval", default=None, help="evaluate at a rational q instead")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="regenerate a table")
    p.add_argument("table_id", choices=TABLE_IDS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--diff", nargs="?", const="", default=None, metavar="DIR",
                   help="compare against golden CSVs (packaged copies if DIR is omitted)")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("zeros", help="real zeros near tau+1 for a family member")
    member(p)
    p.add_argument("--complex", action="store_true", help="also list all complex roots")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("ratio", help="ratio to the Tutte bound at tau+1")
    member(p)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("locus", help="tagged samples of the limiting-zero boundary")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("catalogue", help="all structured forms as JSON")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_catalogue)

    p = sub.add_parser("constraints", help="exact structural checks for a form")
    p.add_argument("--family", required=True, help=", ".join(FAMILY_NAMES))
    p.add_argument("--fixed", type=int, default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_constraints)

    p = sub.add_parser("graph", help="export a constructed graph")
    p.add_argument("--family", required=True, choices=sorted(_GRAPHS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_graph)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ptchrom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundViolated, DenominatorNoCancel, NoConvergence) as exc:
        print(f"ptchrom: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
