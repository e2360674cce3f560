"""Batch command-line front end.

Subcommands: defaults (emit the shipped scenario file), solve, curves, and
compare, all reading a scenario document from a file or standard input.
Output formats: table (human, 2 decimals), structured (canonical JSON), and
columns (CSV at full precision). Exit code 0 on success, 1 on any domain or
input failure.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .errors import WorkbenchError
from .scenarios import GridSpec, default_grid, parse_plot
from .schema import (
    DEFAULT_DOCUMENT_JSON,
    CompareResponse,
    CurvesResponse,
    ScenarioDocument,
    SolveResponse,
    build_compare_response,
    build_curves_response,
    build_solve_response,
    canonical_json,
    document_to_set,
    parse_document,
)

FORMATS = ("table", "structured", "columns")


def _load_document(path: str) -> ScenarioDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_document(text)


def _bool_cell(value: bool) -> str:
    return "yes" if value else "no"


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    lines = ["  ".join(h.ljust(widths[k]) for k, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[k]) for k, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _cmd_defaults(args: argparse.Namespace) -> int:
    sys.stdout.write(DEFAULT_DOCUMENT_JSON)
    return 0


def _solve_table(resp: SolveResponse) -> str:
    headers = ["name", "Y*", "i*", "r*", "M", "C", "I", "G", "NX", "T-G", "ZLB", "notes"]
    rows = []
    for r in resp.results:
        rows.append(
            [
                r.name,
                f"{r.Y_star:.2f}",
                f"{r.i_star:.2f}",
                f"{r.r_star:.2f}",
                f"{r.M_realized:.2f}",
                f"{r.composition.C:.2f}",
                f"{r.composition.I:.2f}",
                f"{r.composition.G:.2f}",
                f"{r.composition.NX:.2f}",
                f"{r.budget_balance:.2f}",
                _bool_cell(r.at_zlb),
                ", ".join(r.diagnostics) or "-",
            ]
        )
    return _render_table(headers, rows)


def _solve_columns(resp: SolveResponse, out) -> None:
    writer = csv.writer(out)
    writer.writerow(
        ["name", "slot", "Y_star", "i_star", "r_star", "M_realized",
         "C", "I", "G", "NX", "budget_balance", "at_zlb", "diagnostics"]
    )
    for r in resp.results:
        writer.writerow(
            [r.name, r.slot, r.Y_star, r.i_star, r.r_star, r.M_realized,
             r.composition.C, r.composition.I, r.composition.G, r.composition.NX,
             r.budget_balance, str(r.at_zlb).lower(), "|".join(r.diagnostics)]
        )


def _cmd_solve(args: argparse.Namespace) -> int:
    resp = build_solve_response(_load_document(args.file))
    if args.format == "structured":
        sys.stdout.write(canonical_json(resp))
    elif args.format == "columns":
        _solve_columns(resp, sys.stdout)
    else:
        sys.stdout.write(_solve_table(resp))
    return 0


def _curves_table(resp: CurvesResponse) -> str:
    headers = ["x", "y", "curve_kind", "scenario"]
    rows = []
    for series in resp.series:
        for x, y in series.points:
            rows.append([f"{x:.2f}", f"{y:.2f}", series.curve_kind, series.scenario])
    return _render_table(headers, rows)


def _curves_columns(resp: CurvesResponse, out) -> None:
    writer = csv.writer(out)
    writer.writerow(["x", "y", "curve_kind", "scenario"])
    for series in resp.series:
        for x, y in series.points:
            writer.writerow([x, y, series.curve_kind, series.scenario])


def _cmd_curves(args: argparse.Namespace) -> int:
    doc = _load_document(args.file)
    plot = parse_plot(args.plot)
    base = default_grid(document_to_set(doc), plot)
    grid = GridSpec(
        min=args.grid_min if args.grid_min is not None else base.min,
        max=args.grid_max if args.grid_max is not None else base.max,
        n=args.grid_n if args.grid_n is not None else base.n,
    )
    resp = build_curves_response(doc, plot, slot=args.slot, grid=grid)
    if args.format == "structured":
        sys.stdout.write(canonical_json(resp))
    elif args.format == "columns":
        _curves_columns(resp, sys.stdout)
    else:
        sys.stdout.write(_curves_table(resp))
    return 0


_COMPARE_ROWS = (
    ("Y*", "Y_star"),
    ("i*", "i_star"),
    ("M", "M_realized"),
    ("C", "C"),
    ("I", "I"),
    ("G", "G"),
    ("NX", "NX"),
    ("T-G", "budget_balance"),
)


def _compare_table(resp: CompareResponse) -> str:
    headers = ["quantity"]
    for k, col in enumerate(resp.columns):
        headers.append(col.name)
        if k > 0:
            delta = resp.deltas[k - 1]
            headers.append(f"d({delta.to_slot}-{delta.from_slot})")
    rows = []
    for label, attr in _COMPARE_ROWS:
        row = [label]
        for k, col in enumerate(resp.columns):
            row.append(f"{getattr(col, attr):.2f}")
            if k > 0:
                row.append(f"{getattr(resp.deltas[k - 1], attr):+.2f}")
        rows.append(row)
    zlb_row = ["ZLB"]
    for k, col in enumerate(resp.columns):
        zlb_row.append(_bool_cell(col.at_zlb))
        if k > 0:
            zlb_row.append("")
    rows.append(zlb_row)
    return _render_table(headers, rows)


def _compare_columns(resp: CompareResponse, out) -> None:
    writer = csv.writer(out)
    writer.writerow(
        ["kind", "slot", "name", "Y_star", "i_star", "M_realized",
         "C", "I", "G", "NX", "budget_balance", "at_zlb"]
    )
    for col in resp.columns:
        writer.writerow(
            ["value", col.slot, col.name, col.Y_star, col.i_star, col.M_realized,
             col.C, col.I, col.G, col.NX, col.budget_balance, str(col.at_zlb).lower()]
        )
    for d in resp.deltas:
        writer.writerow(
            ["delta", f"{d.from_slot}->{d.to_slot}", "", d.Y_star, d.i_star,
             d.M_realized, d.C, d.I, d.G, d.NX, d.budget_balance, ""]
        )


def _parse_slots(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise WorkbenchError(f"invalid --slots value {text!r}; expected e.g. 1,2,3") from None


def _cmd_compare(args: argparse.Namespace) -> int:
    resp = build_compare_response(_load_document(args.file), _parse_slots(args.slots))
    if args.format == "structured":
        sys.stdout.write(canonical_json(resp))
    elif args.format == "columns":
        _compare_columns(resp, sys.stdout)
    else:
        sys.stdout.write(_compare_table(resp))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="islm",
        description="Solve, compare and export curve data for scenario files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("defaults", help="emit the shipped default scenario file")
    p.set_defaults(handler=_cmd_defaults)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--file", "-f", required=True, help="scenario file path, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("solve", help="solve every scenario in a file")
    add_common(p)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("curves", help="export sampled curve data for one plot")
    add_common(p)
    p.add_argument("--slot", type=int, required=True, help="scenario slot, 1 to 3")
    p.add_argument("--plot", required=True, help="islm, money or goods")
    p.add_argument("--grid-min", type=float, default=None)
    p.add_argument("--grid-max", type=float, default=None)
    p.add_argument("--grid-n", type=int, default=None)
    p.set_defaults(handler=_cmd_curves)

    p = sub.add_parser("compare", help="compare selected slots side by side")
    add_common(p)
    p.add_argument("--slots", default="1,2,3", help="comma list of slots, e.g. 1,3")
    p.set_defaults(handler=_cmd_compare)

    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot read scenario file: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(run())
