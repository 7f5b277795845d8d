"""
Command-line interface: ``fermipoly <command> [flags]``.

Commands
--------
vol      volumes of B, P and (with --m/--t) A at one (d, N)
ratio    exact Vol(P)/Vol(B) and, with --m, Vol(A)/Vol(P)
bounds   Pauli-loss bracket, both theorem regimes and the best exact ratio
extreme  extreme points of P with their F-membership verdicts
lme      LME existence grid and moduli dimensions for 0 <= N <= d <= d_max
contour  best exact lower bound on Vol(F)/Vol(P) over a (d, N) grid
verify   Monte Carlo cross-check of the exact ratios

Exit codes: 0 success, 1 I/O failure, 2 bad input, 3 failed internal check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .bounds import (
    best_exact_lower_bound,
    exact_ratio_A_over_P,
    gpc_vs_pauli_ratio_bound,
    guard_fixed_n,
    pauli_loss_bounds,
    ratio_lower_fixed_n,
    ratio_lower_fixed_ratio,
)
from .errors import InvariantViolation, PreconditionError
from .exact import DEFAULT_PRECISION_BITS, BoundInterval, as_rational, format_decimal
from .mc_oracle import agrees, estimate_order_fraction, estimate_pauli_fraction
from .membership import (
    a_subset_F_certificate,
    extreme_points_P,
    lme_exists,
    lme_moduli_dim,
    point_in_F,
    threshold_t,
)
from .volumes import vol_A, vol_B, vol_P

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

CONTOUR_COLUMNS = ("d", "N", "m_star", "ratio_lower", "vacuous")

# the exact optimisation over m costs O(N d^2) big-integer operations
EXACT_D_LIMIT = 2000

_RATIONAL = {"type": "object", "required": ["exact", "decimal"],
             "properties": {"exact": {"type": "string"}, "decimal": {"type": "string"}}}
_INTERVAL = {"type": "object", "required": ["lo", "hi", "precision_bits"],
             "properties": {"lo": {"type": "string"}, "hi": {"type": "string"},
                            "precision_bits": {"type": "integer"}}}
_VALUE = {"oneOf": [_RATIONAL, _INTERVAL, {"type": "null"}]}


def _rows_schema(command: str, row: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "type": "object",
        "required": ["command", "rows"],
        "properties": {
            "command": {"const": command},
            "rows": {"type": "array", "items": {"type": "object", "required": sorted(row), "properties": row}},
        },
    }


SCHEMAS: Dict[str, Dict[str, Any]] = {
    "vol": _rows_schema("vol", {"polytope": {"enum": ["B", "P", "A"]}, "d": {"type": "integer"},
                                "N": {"type": "string"}, "coeff": _RATIONAL}),
    "ratio": _rows_schema("ratio", {"ratio": {"type": "string"}, "value": _RATIONAL}),
    "bounds": _rows_schema("bounds", {"name": {"type": "string"}, "value": _VALUE,
                                      "vacuous": {"type": ["boolean", "null"]},
                                      "note": {"type": "string"}}),
    "extreme": _rows_schema("extreme", {"kind": {"enum": ["Slater", "Interior"]}, "ones": {"type": "integer"},
                                        "zeros": {"type": "integer"}, "fill": {"type": ["string", "null"]},
                                        "in_F": {"type": "boolean"},
                                        "reason": {"enum": ["Slater", "LME-exists", "LME-absent"]}}),
    "lme": _rows_schema("lme", {"d": {"type": "integer"}, "N": {"type": "integer"}, "exists": {"type": "boolean"},
                                "dim_kind": {"enum": ["Empty", "Point", "ExistsOnly", "Value"]},
                                "dim": {"type": ["integer", "null"]}}),
    "contour": _rows_schema("contour", {"d": {"type": "integer"}, "N": {"type": "integer"},
                                        "m_star": {"type": ["integer", "null"]},
                                        "ratio_lower": {"type": ["string", "null"]},
                                        "vacuous": {"type": "boolean"}}),
    "verify": _rows_schema("verify", {"quantity": {"type": "string"}, "exact": _RATIONAL,
                                      "mean": {"type": "number"}, "stderr": {"type": "number"},
                                      "samples": {"type": "integer"}, "accepted": {"type": "integer"},
                                      "effective": {"type": "integer"}, "seed": {"type": "integer"},
                                      "agrees": {"type": "boolean"}}),
}


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _rat(q: Fraction, digits: int) -> Dict[str, str]:
    return {"exact": f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator),
            "decimal": format_decimal(q, digits)}


def _interval(b: BoundInterval, digits: int) -> Dict[str, Any]:
    lo, hi = b.to_str(digits)[1:-1].split(", ")
    return {"lo": lo, "hi": hi, "precision_bits": b.precision_bits}


def _value(v: Any, digits: int) -> Any:
    if v is None:
        return None
    if isinstance(v, BoundInterval):
        return _interval(v, digits)
    return _rat(as_rational(v), digits)


def _flat(value: Any) -> str:
    """Cell text for csv/table output."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, dict):
        if "decimal" in value:
            return value["decimal"]
        return f"[{value['lo']}, {value['hi']}]"
    return str(value)


def render(command: str, rows: Sequence[Dict[str, Any]], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "json":
        json.dump({"command": command, "rows": list(rows)}, out, indent=2)
        out.write("\n")
        return
    columns = list(rows[0]) if rows else []
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_flat(row[c]) for c in columns])
        return
    cells = [columns] + [[_flat(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(columns))]
    for n, r in enumerate(cells):
        out.write("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip() + "\n")
        if n == 0:
            out.write("  ".join("-" * w for w in widths) + "\n")


def render_lme_grid(rows: Sequence[Dict[str, Any]], d_max: int, out: io.TextIOBase) -> None:
    """Table layout with N down and d across, as in the usual existence table."""
    mark = {(r["d"], r["N"]): ("Y" if r["exists"] else "x") for r in rows}
    out.write("N\\d " + " ".join(f"{d:>2}" for d in range(d_max + 1)) + "\n")
    for N in range(d_max + 1):
        cells = [f"{mark.get((d, N), '.'):>2}" for d in range(d_max + 1)]
        out.write(f"{N:>3} " + " ".join(cells) + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _check_unit(q: Fraction, what: str) -> Fraction:
    if not 0 <= q <= 1:
        raise InvariantViolation(f"{what} = {q} is outside [0, 1]")
    return q


def _cap_t(args: argparse.Namespace) -> Fraction:
    if args.t is not None:
        return as_rational(args.t)
    return threshold_t(args.n, args.m)


def cmd_vol(args: argparse.Namespace) -> List[Dict[str, Any]]:
    d, N = args.d, as_rational(args.n)
    vols = [("B", vol_B(d, N)), ("P", vol_P(d, N))]
    if args.m is not None:
        if args.t is None:
            raise PreconditionError("vol with --m also needs --t")
        vols.append(("A", vol_A(d, N, args.m, as_rational(args.t))))
    if not vols[-1][1].coeff <= vols[1][1].coeff <= vols[0][1].coeff:
        raise InvariantViolation("volume sandwich A <= P <= B violated")
    return [{"polytope": name, "d": d, "N": str(N), "coeff": _rat(v.coeff, args.digits)} for name, v in vols]


def cmd_ratio(args: argparse.Namespace) -> List[Dict[str, Any]]:
    d, N = args.d, args.n
    rows = [{"ratio": "P/B", "value": _rat(_check_unit(vol_P(d, N) / vol_B(d, N), "P/B"), args.digits)}]
    if args.m is not None:
        t = _cap_t(args)
        q = vol_A(d, N, args.m, t) / vol_P(d, N)
        rows.append({"ratio": f"A/P (m={args.m}, t={t})", "value": _rat(_check_unit(q, "A/P"), args.digits)})
    return rows


def cmd_bounds(args: argparse.Namespace) -> List[Dict[str, Any]]:
    d, N, bits, digits = args.d, args.n, args.precision_bits, args.digits
    lo, hi = pauli_loss_bounds(d, N)
    rows = [
        {"name": "pauli_loss_lower", "value": _rat(lo, digits), "vacuous": lo <= 0, "note": "lower end for Vol(P)/Vol(B)"},
        {"name": "pauli_loss_upper", "value": _rat(hi, digits), "vacuous": None, "note": "upper end for Vol(P)/Vol(B)"},
    ]
    guard = guard_fixed_n(d, N)
    rows.append({"name": "guard_fixed_n", "value": None, "vacuous": None, "note": f"d((N-1)/N)^(d-1) <= 1: {str(guard).lower()}"})
    if 8 <= N and 2 * N <= d and guard:
        r = ratio_lower_fixed_n(d, N, bits)
        rows.append({"name": "fixed_n_lower", "value": _value(r.value, digits), "vacuous": r.vacuous,
                     "note": "deficit " + _flat(_value(r.deficit, digits))})
    else:
        rows.append({"name": "fixed_n_lower", "value": None, "vacuous": None, "note": "hypotheses not met"})
    if N >= 20 and 2 * N < d:
        r = ratio_lower_fixed_ratio(d, N, bits)
        rows.append({"name": "fixed_ratio_lower", "value": _value(r.value, digits), "vacuous": r.vacuous,
                     "note": "deficit " + _flat(_value(r.deficit, digits))})
    else:
        rows.append({"name": "fixed_ratio_lower", "value": None, "vacuous": None, "note": "hypotheses not met"})
    if 8 <= N and 2 * N <= d and (d <= EXACT_D_LIMIT or args.exact):
        m_star, q = best_exact_lower_bound(d, N)
        rows.append({"name": "best_exact_lower", "value": _rat(_check_unit(q, "A/P"), digits), "vacuous": q <= 0,
                     "note": f"m_star={m_star}"})
        rows.append({"name": "gpc_vs_pauli_upper", "value": _value(gpc_vs_pauli_ratio_bound(d, N, bits), digits),
                     "vacuous": None, "note": "Vol(P minus F) / Vol(B minus P)"})
    else:
        note = "needs 8 <= N <= d/2" if not (8 <= N and 2 * N <= d) else f"skipped for d > {EXACT_D_LIMIT}; pass --exact"
        rows.append({"name": "best_exact_lower", "value": None, "vacuous": None, "note": note})
    return rows


def cmd_extreme(args: argparse.Namespace) -> List[Dict[str, Any]]:
    rows = []
    for p in extreme_points_P(args.d, args.n):
        v = point_in_F(p)
        fill = p.fill
        rows.append({"kind": p.kind.value, "ones": p.ones, "zeros": p.zeros,
                     "fill": None if fill is None else str(fill), "in_F": v.in_F, "reason": v.reason.value})
    return rows


def lme_rows(d_max: int) -> List[Dict[str, Any]]:
    if d_max < 0:
        raise PreconditionError("d_max must be >= 0")
    rows = []
    for d in range(d_max + 1):
        for N in range(d + 1):
            dim = lme_moduli_dim(d, N)
            rows.append({"d": d, "N": N, "exists": lme_exists(d, N), "dim_kind": dim.kind.value, "dim": dim.as_int()})
    return rows


def cmd_lme(args: argparse.Namespace) -> List[Dict[str, Any]]:
    if args.d_max < 2:
        raise PreconditionError("lme needs --d-max >= 2")
    return lme_rows(args.d_max)


@dataclass(frozen=True)
class GridCell:
    d: int
    N: int
    m_star: Optional[int]
    ratio_lower: Optional[str]
    vacuous_theorem_bound: bool

    def as_row(self) -> Dict[str, Any]:
        return {"d": self.d, "N": self.N, "m_star": self.m_star, "ratio_lower": self.ratio_lower,
                "vacuous": self.vacuous_theorem_bound}


def contour_cell(d: int, N: int, digits: int) -> GridCell:
    """Best exact ratio at (d, N); ``vacuous`` reports the fixed-N theorem bound (True when it does not apply)."""
    if not a_subset_F_certificate(d, N, 1):
        return GridCell(d, N, None, None, True)
    m_star, q = best_exact_lower_bound(d, N)
    _check_unit(q, f"ratio at ({d}, {N})")
    vacuous = ratio_lower_fixed_n(d, N).vacuous if guard_fixed_n(d, N) else True
    return GridCell(d, N, m_star, format_decimal(q, digits), vacuous)


def _contour_task(args: Tuple[int, int, int]) -> GridCell:
    return contour_cell(*args)


def contour_pairs(d_max: int, n_max: int) -> List[Tuple[int, int]]:
    return [(d, N) for d in range(16, d_max + 1) for N in range(8, min(n_max, d // 2) + 1)]


def run_contour_grid(d_max: int, n_max: int, digits: int = 12, jobs: int = 1) -> Iterator[GridCell]:
    """Cells in lexicographic (d, N) order; with jobs > 1 they are computed in worker processes."""
    if d_max < 16 or n_max < 8:
        raise PreconditionError("contour needs --d-max >= 16 and --n-max >= 8")
    if digits < 1:
        raise PreconditionError("digits must be >= 1")
    tasks = [(d, N, digits) for d, N in contour_pairs(d_max, n_max)]
    if jobs <= 1:
        yield from map(_contour_task, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so output does not depend on scheduling
        yield from pool.map(_contour_task, tasks, chunksize=8)


def cmd_contour(args: argparse.Namespace) -> Iterable[Dict[str, Any]]:
    n_max = args.n_max if args.n_max is not None else args.d_max // 2
    return (c.as_row() for c in run_contour_grid(args.d_max, n_max, args.digits, args.jobs))


def cmd_verify(args: argparse.Namespace) -> List[Dict[str, Any]]:
    d, N, digits = args.d, args.n, args.digits
    rows = []
    exact = vol_P(d, N) / vol_B(d, N)
    est = estimate_pauli_fraction(d, N, args.samples, args.seed, workers=args.jobs)
    rows.append(_verify_row("P/B", exact, est, digits))
    if args.m is not None:
        t = _cap_t(args)
        exact = vol_A(d, N, args.m, t) / vol_P(d, N)
        est = estimate_order_fraction(d, N, args.m, t, args.samples, args.seed, workers=args.jobs)
        rows.append(_verify_row(f"A/P (m={args.m}, t={t})", exact, est, digits))
    return rows


def _verify_row(name: str, exact: Fraction, est, digits: int) -> Dict[str, Any]:
    return {"quantity": name, "exact": _rat(exact, digits), "mean": est.mean, "stderr": est.stderr,
            "samples": est.samples, "accepted": est.accepted, "effective": est.effective, "seed": est.seed,
            "agrees": agrees(est, exact)}


COMMANDS = {
    "vol": cmd_vol, "ratio": cmd_ratio, "bounds": cmd_bounds, "extreme": cmd_extreme,
    "lme": cmd_lme, "contour": cmd_contour, "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _rational_arg(text: str) -> str:
    try:
        as_rational(text)
    except PreconditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermipoly", description="Volumes and bounds for fermionic eigenvalue polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt_choices=("json", "csv", "table"), fmt_default="table") -> None:
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)
        p.add_argument("--digits", type=int, default=12, help="significant digits for decimals")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("vol", help="volumes of B, P and A")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=_rational_arg, required=True, help="N as p/q or decimal")
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=_rational_arg)
    common(p)

    p = sub.add_parser("ratio", help="exact volume ratios")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=_rational_arg, help="cap value (default: the certified threshold)")
    common(p)

    p = sub.add_parser("bounds", help="lower bounds on Vol(F)/Vol(P)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
    p.add_argument("--exact", action="store_true", help=f"compute the best exact ratio even for d > {EXACT_D_LIMIT}")
    common(p)

    p = sub.add_parser("extreme", help="extreme points of P and F-membership")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("lme", help="LME existence and moduli dimensions")
    p.add_argument("--d-max", type=int, default=12)
    common(p)

    p = sub.add_parser("contour", help="grid of best exact lower bounds")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    common(p, fmt_default="csv")

    p = sub.add_parser("verify", help="Monte Carlo cross-check")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=_rational_arg, help="cap value (default: the certified threshold)")
    p.add_argument("--samples", type=int, default=10 ** 6)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    return parser


def _emit(args: argparse.Namespace, rows: Iterable[Dict[str, Any]], out) -> None:
    if args.command == "contour" and args.format == "csv":
        # stream rows so long sweeps show progress
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CONTOUR_COLUMNS)
        for row in rows:
            writer.writerow([_flat(row[c]) for c in CONTOUR_COLUMNS])
            out.flush()
        return
    rows = list(rows)
    if args.command == "lme" and args.format == "table":
        render_lme_grid(rows, args.d_max, out)
        return
    render(args.command, rows, args.format, out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # exact fractions at large d have tens of thousands of digits
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rows = COMMANDS[args.command](args)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                _emit(args, rows, fh)
        else:
            _emit(args, rows, sys.stdout)
        if args.command == "verify" and not all(r["agrees"] for r in rows):
            print("fermipoly: Monte Carlo estimate disagrees with the exact value", file=sys.stderr)
            return EXIT_INVARIANT
    except InvariantViolation as exc:
        print(f"fermipoly: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (PreconditionError, TypeError) as exc:
        print(f"fermipoly: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fermipoly: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
