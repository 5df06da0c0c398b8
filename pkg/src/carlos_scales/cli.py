"""Command-line interface: ``carlos-scales <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from carlos_scales import analysis, builders
from carlos_scales.errors import CarlosError, SpecParseError
from carlos_scales.intervals import parse_interval
from carlos_scales.lsq import TargetSystem, optimal_unit
from carlos_scales.oracle import oracle_check
from carlos_scales.report import export_scl, make_report, paper_table_reports, render_table

PRESETS = ("carlos2", "carlos3", "pentatonic", "general_pair")
EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _pair_intervals(args) -> tuple:
    if not args.intervals:
        raise UsageError("--preset general_pair needs --intervals Ia,Ib")
    toks = args.intervals.split(",")
    if len(toks) != 2:
        raise UsageError(f"--intervals takes exactly two intervals, got {args.intervals!r}")
    return parse_interval(toks[0]), parse_interval(toks[1])


def _family(args) -> analysis.Family:
    if args.preset == "general_pair":
        return analysis.general_pair_family(*_pair_intervals(args))
    return analysis.FAMILIES[args.preset]


def _selected_system(args) -> tuple[TargetSystem, tuple[int, ...]]:
    chosen = [x for x in (args.preset, args.system, args.system_json) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --preset, --system, --system-json")
    if args.system:
        return builders.parse_system(args.system), ()
    if args.system_json:
        return builders.system_from_json(Path(args.system_json).read_text()), ()
    if not args.params:
        raise UsageError("--preset needs --params")
    params = tuple(_int_list(args.params))
    family = _family(args)
    if len(params) != family.arity:
        raise UsageError(f"{args.preset} takes {family.arity} parameters, got {len(params)}")
    return family.build(*params), params


def _add_system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--params", help="a,b[,c]")
    p.add_argument("--intervals", help="Ia,Ib for --preset general_pair, e.g. P4,P5")
    p.add_argument("--system", help='explicit targets, e.g. "4:m3,5:M3,9:P5"')
    p.add_argument("--system-json", metavar="FILE", help="JSON array of {steps, interval}")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carlos-scales",
        description="Least-squares equal-step scales that favour chosen just intervals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="derive one scale and report its errors")
    _add_system_args(p)
    _add_format(p)
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_TOL_CENTS)

    p = sub.add_parser("search", help="sweep a scale family for scales within tolerance")
    p.add_argument("--preset", choices=PRESETS, default="carlos2")
    p.add_argument("--intervals", help="Ia,Ib for --preset general_pair")
    p.add_argument("--max", type=int, help="upper bound for every parameter")
    p.add_argument("--bounds", help="per-parameter upper bounds, e.g. 20,30")
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_TOL_CENTS)
    p.add_argument("--no-gcd-trivial", action="store_true", help="drop pairs with a common factor")
    p.add_argument("--limit", type=int, help="print at most this many hits")
    _add_format(p)

    p = sub.add_parser("table", help="reproduce the nine-row table of (a,b)-Carlos scales")
    _add_format(p)

    p = sub.add_parser("export-scl", help="write a Scala .scl file")
    _add_system_args(p)
    p.add_argument("--steps", type=int, required=True, help="number of units in the file")
    p.add_argument("--description")
    p.add_argument("--output", "-o", help="file to write (default stdout)")

    p = sub.add_parser("oracle-check", help="compare the closed form with a numeric minimizer")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threshold", type=float, default=1e-10)
    return parser


def _cmd_derive(args, out) -> int:
    system, params = _selected_system(args)
    scale = optimal_unit(system)
    report = make_report(scale, params)
    out.write(render_table([report], args.format))
    if args.format == "table":
        ok, worst = analysis.tolerance_check(scale, args.tol)
        out.write(f"\nmax |dev| {worst:.3f} cents: {'within' if ok else 'outside'} {args.tol:g} cent tolerance\n")
    return EXIT_OK


def _cmd_search(args, out) -> int:
    family = _family(args)
    if args.bounds:
        bounds = _int_list(args.bounds)
    elif args.max is not None:
        bounds = [args.max] * family.arity
    else:
        raise UsageError("search needs --max or --bounds")
    hits = analysis.search_generic(family, bounds, args.tol, exclude_gcd_trivial=args.no_gcd_trivial)
    if args.limit is not None:
        hits = hits[: args.limit]
    if not hits:
        sys.stderr.write("no scales within tolerance\n")
        return EXIT_OK
    out.write(render_table([make_report(h.scale, h.params) for h in hits], args.format))
    return EXIT_OK


def _cmd_table(args, out) -> int:
    out.write(render_table(paper_table_reports(), args.format))
    return EXIT_OK


def _cmd_export_scl(args, out) -> int:
    system, _ = _selected_system(args)
    text = export_scl(optimal_unit(system), args.steps, args.description or system.label)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii", newline="\n")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_oracle_check(args, out) -> int:
    s = oracle_check(args.count, args.seed)
    ok = s.max_discrepancy < args.threshold
    out.write(
        f"systems checked:      {s.count}\n"
        f"max |closed - oracle|: {s.max_discrepancy:.3e}\n"
        f"max |normal eq sum|:   {s.max_stationarity:.3e}\n"
        f"{'PASS' if ok else 'FAIL'} (threshold {args.threshold:g})\n"
    )
    return EXIT_OK if ok else EXIT_ERROR


COMMANDS = {
    "derive": _cmd_derive,
    "search": _cmd_search,
    "table": _cmd_table,
    "export-scl": _cmd_export_scl,
    "oracle-check": _cmd_oracle_check,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, SpecParseError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"carlos-scales: error: {exc}\n")
        return EXIT_USAGE
    except (CarlosError, OSError) as exc:
        sys.stderr.write(f"carlos-scales: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
