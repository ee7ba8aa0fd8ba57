"""Command-line front end: validate models, run the pipeline, emit CSV/JSON.

Exit codes: 0 success, 1 I/O failure, 2 validation failure, 3 numerical
failure.  All output is deterministic for a fixed input and platform: no
randomness, fixed iteration orders, fixed sorting conventions.  Floats in
JSON reports are emitted as shortest-round-trip decimal strings so that no
reader rounds them; CSV cells use 17-significant-digit scientific notation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .charpoly import characteristic_polynomial, exact_eigenvalues_at
from .discriminant import (
    EXACT_SOURCE,
    ExceptionalPointEstimate,
    discriminant,
    exceptional_points,
    nearest_exceptional_point,
    reconstruction_source,
)
from .errors import RootFindingFailure, SecresError, ValidationError
from .model import MatrixModel, load_model
from .rspt import p_space_series
from .secular import eigenvalues_at, reconstruct
from .series import format_coefficients

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

IMAG_REPORT_THRESHOLD = 1e-10
TABLE1_ORDERS = (2, 4, 6, 8, 10)


def _sci(x: float) -> str:
    """17-significant-digit scientific notation (CSV cells, series tables)."""
    return f"{x:.16e}"


def _json_float(x: float) -> str:
    """Shortest decimal string that round-trips to the same double."""
    return repr(float(x))


def _csv_energy(z: complex) -> str:
    if abs(z.imag) > IMAG_REPORT_THRESHOLD:
        return f"{z.real:.16e}{z.imag:+.16e}j"
    return _sci(z.real)


@dataclass(frozen=True)
class SweepSpec:
    """Real coupling grid and the reconstruction orders to evaluate on it."""

    lambda_min: float
    lambda_max: float
    steps: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.lambda_min < self.lambda_max:
            raise ValueError(
                f"lambda_min ({self.lambda_min}) must be below "
                f"lambda_max ({self.lambda_max})"
            )
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        for k in self.orders:
            if k < 0:
                raise ValueError(f"orders must be >= 0, got {k}")


@dataclass
class EigenSweepRow:
    """One real coupling sample: exact spectrum plus per-order resummations."""

    lambda_value: float
    exact_energies: tuple[float, ...]
    effective_energies: dict[int, tuple[complex, ...]] = field(default_factory=dict)
    error: str = ""


def bundled_model_path() -> Path:
    """Path of the tridiagonal 3x3 fixture shipped with the package."""
    return Path(str(resources.files("secres").joinpath("data/zheng3.json")))


def _parse_orders(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def run_sweep(model: MatrixModel, spec: SweepSpec) -> list[EigenSweepRow]:
    """Evaluate exact and resummed eigenvalues on the coupling grid.

    Root-finding failures mark the row instead of aborting the sweep.
    """
    cp = characteristic_polynomial(model)
    polys = {
        k: reconstruct(p_space_series(model, k)) for k in spec.orders
    }
    rows = []
    width = spec.lambda_max - spec.lambda_min
    for index in range(spec.steps):
        lam = spec.lambda_min + width * index / (spec.steps - 1)
        row = EigenSweepRow(lambda_value=lam, exact_energies=())
        try:
            exact = exact_eigenvalues_at(cp, lam)
            row.exact_energies = tuple(z.real for z in exact)
            for k in spec.orders:
                row.effective_energies[k] = tuple(eigenvalues_at(polys[k], lam))
        except RootFindingFailure as exc:
            row.error = str(exc).replace(",", ";")
        rows.append(row)
    return rows


def sweep_csv_lines(model: MatrixModel, spec: SweepSpec) -> list[str]:
    header = ["lambda"]
    header += [f"exact_{i}" for i in range(1, model.dimension + 1)]
    for k in spec.orders:
        header += [f"eff_K{k}_{i}" for i in range(1, len(model.p_space) + 1)]
    header.append("error")
    lines = [",".join(header)]
    for row in run_sweep(model, spec):
        cells = [_sci(row.lambda_value)]
        if row.exact_energies:
            cells += [_sci(x) for x in row.exact_energies]
        else:
            cells += ["nan"] * model.dimension
        for k in spec.orders:
            values = row.effective_energies.get(k)
            if values is None:
                cells += ["nan"] * len(model.p_space)
            else:
                cells += [_csv_energy(z) for z in values]
        cells.append(row.error)
        lines.append(",".join(cells))
    return lines


def _point_dict(point: ExceptionalPointEstimate) -> dict:
    return {
        "re": _json_float(point.lambda_value.real),
        "im": _json_float(point.lambda_value.imag),
        "modulus": _json_float(point.modulus),
        "source": point.source,
        "residual": _json_float(point.residual),
    }


def _ep_block(points: list[ExceptionalPointEstimate]) -> dict:
    nearest = nearest_exceptional_point(points)
    block = _point_dict(nearest)
    block["multiplicity"] = nearest.multiplicity
    return {
        "nearest": block,
        "nearest_modulus": _json_float(nearest.modulus),
        "points": [_point_dict(p) for p in points],
    }


def ep_report(
    model: MatrixModel, orders: tuple[int, ...], include_exact: bool
) -> dict:
    """Exceptional points per reconstruction order, with the exact reference."""
    report: dict = {"orders": []}
    if include_exact:
        disc = discriminant(characteristic_polynomial(model))
        report["exact"] = _ep_block(exceptional_points(disc, EXACT_SOURCE))
    for k in orders:
        poly = reconstruct(p_space_series(model, k))
        disc = discriminant(poly)
        entry = {"order": k}
        entry.update(_ep_block(exceptional_points(disc, reconstruction_source(k))))
        report["orders"].append(entry)
    return report


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def cmd_validate(args: argparse.Namespace) -> int:
    load_model(args.model)
    print("OK")
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    lines = []
    for state in p_space_series(model, args.order):
        lines.append(f"state {state.state_index}")
        for power, c in enumerate(state.energy_series.coefficients):
            lines.append(f"  order {power:>3d}  {_sci(c)}")
    _write_output("\n".join(lines), args.out)
    return EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    cp = characteristic_polynomial(model)
    lines = [
        f"p_{j}(lambda) = {format_coefficients(poly.coefficients, var='lambda')}"
        for j, poly in enumerate(cp.coefficients, start=1)
    ]
    _write_output("\n".join(lines), args.out)
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    poly = reconstruct(p_space_series(model, args.order))
    _write_output(json.dumps(poly.to_dict(), indent=2), args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    spec = SweepSpec(
        lambda_min=args.lambda_min,
        lambda_max=args.lambda_max,
        steps=args.steps,
        orders=_parse_orders(args.orders),
    )
    lines = sweep_csv_lines(model, spec)
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_ep(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    report = ep_report(model, _parse_orders(args.orders), args.exact)
    _write_output(json.dumps(report, indent=2), args.out)
    return EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    path = args.model if args.model else bundled_model_path()
    model = load_model(path)
    report = ep_report(model, TABLE1_ORDERS, include_exact=True)
    lines = ["K      nearest-EP modulus"]
    for entry in report["orders"]:
        lines.append(f"{entry['order']:<6d} {entry['nearest_modulus']}")
    lines.append(f"exact  {report['exact']['nearest_modulus']}")
    _write_output("\n".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secres",
        description=(
            "Resum matrix perturbation series through the truncated secular "
            "polynomial and locate exceptional points in the complex "
            "coupling plane."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model(p):
        p.add_argument("--model", required=True, help="model JSON file")

    def add_out(p):
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("validate", help="check a model file")
    add_model(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("series", help="print per-state energy series")
    add_model(p)
    p.add_argument("--order", type=int, required=True, help="truncation order K")
    add_out(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("charpoly", help="print the exact characteristic polynomial")
    add_model(p)
    add_out(p)
    p.set_defaults(handler=cmd_charpoly)

    p = sub.add_parser("reconstruct", help="emit the truncated secular polynomial")
    add_model(p)
    p.add_argument("--order", type=int, required=True, help="truncation order K")
    add_out(p)
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("sweep", help="CSV of exact vs resummed eigenvalues")
    add_model(p)
    p.add_argument("--orders", default="6", help="comma-separated orders K")
    p.add_argument("--lambda-min", type=float, default=0.0)
    p.add_argument("--lambda-max", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=101)
    add_out(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("ep", help="JSON report of exceptional points")
    add_model(p)
    p.add_argument("--orders", default="", help="comma-separated orders K")
    p.add_argument("--exact", action="store_true",
                   help="include the exact characteristic-polynomial reference")
    add_out(p)
    p.set_defaults(handler=cmd_ep)

    p = sub.add_parser(
        "table1",
        help="nearest-EP modulus for K=2,4,6,8,10 plus exact, bundled fixture",
    )
    p.add_argument("--model", default=None, help="override the bundled fixture")
    add_out(p)
    p.set_defaults(handler=cmd_table1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (RootFindingFailure, SecresError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
