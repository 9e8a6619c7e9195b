"""Command-line front end: figure datasets, sweeps, thresholds, verification."""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    DEFAULT_POINTS,
    FAMILIES,
    MEASURES,
    SweepSpec,
    SweepTable,
    critical_p,
    critical_r,
    default_p_grid,
    default_r_grid,
    format_real,
    run_sweep,
)
from .exceptions import DomainError
from .measures import DEFAULT_RESOLUTION, discord
from .states import acceleration_to_r, rho_AI, rho_AII, rho_III
from .verify import verify_claims

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FIGURES = {
    1: "D(A:I) surface over (r, p)",
    2: "N(rho_A,I) surface over (r, p)",
    3: "D(A:II) surface over (r, p)",
    4: "N(rho_A,II) surface over (r, p)",
    5: "six discord curves vs r at p=1 (A:I, I:A, A:II, II:A, I:II, II:I)",
    6: "entanglement of formation E_f(rho_A,I) surface over (r, p)",
    7: "negativity gap N(rho_I,B) - N(rho~_I,B) surface over (r, beta)",
}

FIGURE_SPECS = {
    1: ("AI", ("discord",)),
    2: ("AI", ("negativity",)),
    3: ("AII", ("discord",)),
    4: ("AII", ("negativity",)),
    6: ("AI", ("eof",)),
    7: ("IB_pair", ("negativity",)),
}


def _figure_help() -> str:
    return "figure ids:\n" + "\n".join(f"  {k}: {v}" for k, v in FIGURES.items())


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", "-o", help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--r-points", type=int, default=DEFAULT_POINTS, help="points on r in [0, pi/4]")
    parser.add_argument("--p-points", type=int, default=DEFAULT_POINTS, help="points on p (or beta) in [0, 1]")
    parser.add_argument("--force-oracle", action="store_true", help="use the grid oracle for every discord")
    parser.add_argument("--oracle-resolution", type=int, default=DEFAULT_RESOLUTION[0],
                        help="theta points of the oracle grid; phi gets twice as many")
    parser.add_argument("--no-metadata", action="store_true", help="omit the run metadata header")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rindler",
        description="Entanglement and discord of pseudo-entangled states under the Unruh channel.",
        epilog=_figure_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="write the dataset behind one figure", epilog=_figure_help(),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("figure_id", type=int, choices=sorted(FIGURES))
    _common(p)

    p = sub.add_parser("sweep", help="evaluate measures over an (r, p) grid")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--measures", nargs="+", choices=MEASURES, required=True)
    p.add_argument("--measured-side", type=int, choices=(0, 1), default=1)
    _common(p)

    p = sub.add_parser("threshold", help="critical p at fixed r, or critical r at fixed p")
    p.add_argument("--family", choices=("AI", "AII"), default="AI")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=float, help="mixing angle; prints the critical p")
    group.add_argument("--p", type=float, help="fraction p; prints the critical r (AI only)")
    _common(p)

    p = sub.add_parser("verify", help="run every quantitative claim check")
    _common(p)

    p = sub.add_parser("convert", help="mixing angle r from acceleration a and frequency omega (c=1)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    _common(p)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_table(table: SweepTable, args) -> None:
    if args.format == "json":
        text = table.to_json(metadata=not args.no_metadata)
    else:
        text = table.to_csv(metadata=not args.no_metadata)
    _emit(text, args.output)


def _check_points(args) -> None:
    if args.r_points < 1 or args.p_points < 1:
        raise DomainError("--r-points and --p-points must be positive")
    if args.oracle_resolution < 2:
        raise DomainError("--oracle-resolution must be at least 2")


def _resolution(args) -> tuple[int, int]:
    return args.oracle_resolution, 2 * args.oracle_resolution


def figure_five(args) -> SweepTable:
    """Discord of the three bipartitions in both measurement directions at p=1."""
    columns = ["r", "D(A:I)", "D(I:A)", "D(A:II)", "D(II:A)", "D(I:II)", "D(II:I)"]
    rows = []
    for r in default_r_grid(args.r_points):
        row = [float(r)]
        for rho in (rho_AI(1.0, r), rho_AII(1.0, r), rho_III(r)):
            for side in (1, 0):
                row.append(discord(rho, side, args.force_oracle, _resolution(args)).discord)
        rows.append(row)
    meta = {"figure": 5, "p": 1.0, "r_points": args.r_points}
    return SweepTable(columns, rows, meta)


def cmd_figure(args) -> int:
    _check_points(args)
    if args.figure_id == 5:
        table = figure_five(args)
    else:
        family, measures = FIGURE_SPECS[args.figure_id]
        spec = SweepSpec(family, default_r_grid(args.r_points), default_p_grid(args.p_points), measures,
                         force_oracle=args.force_oracle, oracle_resolution=_resolution(args))
        table = run_sweep(spec)
        table.metadata["figure"] = args.figure_id
    _write_table(table, args)
    return EXIT_OK


def cmd_sweep(args) -> int:
    _check_points(args)
    spec = SweepSpec(args.family, default_r_grid(args.r_points), default_p_grid(args.p_points),
                     tuple(args.measures), measured_side=args.measured_side,
                     force_oracle=args.force_oracle, oracle_resolution=_resolution(args))
    _write_table(run_sweep(spec), args)
    return EXIT_OK


def _fmt_optional(v: float | None) -> str:
    return "none" if v is None else format_real(v)


def cmd_threshold(args) -> int:
    if args.r is not None:
        key, value, result = "p_c", args.r, critical_p(args.r, args.family)
        record = {"r": args.r, "family": args.family, "p_c": result}
    else:
        if args.family != "AI":
            raise DomainError("critical r is defined for the AI family only")
        key, value, result = "r_c", args.p, critical_r(args.p)
        record = {"p": args.p, "family": args.family, "r_c": result}
    if args.format == "json":
        text = json.dumps(record) + "\n"
    else:
        first = "r" if args.r is not None else "p"
        text = f"{first},family,{key}\n{format_real(value)},{args.family},{_fmt_optional(result)}\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify_claims()
    if args.format == "json":
        text = json.dumps([r.as_dict() for r in results], indent=1) + "\n"
    else:
        text = "".join(r.line() + "\n" for r in results)
        passed = sum(r.passed for r in results)
        text += f"{passed}/{len(results)} claims passed\n"
    _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_convert(args) -> int:
    r = acceleration_to_r(args.a, args.omega)
    if args.format == "json":
        text = json.dumps({"a": args.a, "omega": args.omega, "r": r}) + "\n"
    else:
        text = f"a,omega,r\n{format_real(args.a)},{format_real(args.omega)},{format_real(r)}\n"
    _emit(text, args.output)
    return EXIT_OK


COMMANDS = {
    "figure": cmd_figure,
    "sweep": cmd_sweep,
    "threshold": cmd_threshold,
    "verify": cmd_verify,
    "convert": cmd_convert,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"rindler {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
