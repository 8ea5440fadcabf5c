"""Command-line interface: ``qwzeta {analyze,sweep,verify,eval,print-schema}``.

Exit status is 0 on success (WARN rows allowed), 1 when a check fails, and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Any, Sequence

from . import __version__
from .absolute import (
    Z_f_estimate,
    functional_eq_residual_estimate,
    log_epsilon_f_estimate,
    log_zeta_f_estimate,
    plan_absolute_zeta,
)
from .barnes import DEFAULT_CONFIG, AccuracyError, BarnesEvalConfig, DomainError, PoleError
from .periodicity import period
from .report import SCHEMA_VERSION, _phi_text, analyze, form_to_dict, render_text, schema
from .suites import FAIL, SUITES, overall_status, run_suite
from .walks import CoinType, Family, WalkSpec
from .walkzeta import InfinitePeriodError, ZetaProductForm, zeta_of_walk

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_ORDER = (Family.HADAMARD2, Family.GROVER3)
TYPE_ORDER = (CoinType.M, CoinType.F)


class UsageError(Exception):
    pass


# -- argument helpers -------------------------------------------------------------


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _parse_points(text: str, quantity: str) -> list[tuple[float, ...]]:
    """``s1,s2,...`` for zeta/epsilon/residual; ``w:s,w:s,...`` for Z."""
    points = []
    for item in (t.strip() for t in text.split(",")):
        if not item:
            continue
        parts = item.split(":")
        try:
            values = tuple(float(p) for p in parts)
        except ValueError:
            raise UsageError(f"bad point {item!r}")
        if quantity == "Z" and len(values) != 2:
            raise UsageError(f"Z points are w:s pairs, got {item!r}")
        if quantity != "Z" and len(values) != 1:
            raise UsageError(f"{quantity} points are single s values, got {item!r}")
        points.append(values)
    if not points:
        raise UsageError("no points given")
    return points


def _spec_from_args(args) -> WalkSpec:
    if args.family is None or args.type is None or args.n is None:
        raise UsageError("--family, --type and --n are required")
    try:
        return WalkSpec(Family(args.family), CoinType(args.type), args.n)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cfg(args) -> BarnesEvalConfig:
    tol = getattr(args, "tol", None)
    return DEFAULT_CONFIG if tol is None else replace(DEFAULT_CONFIG, target_rel_tol=tol)


def _emit(args, payload: dict[str, Any] | None, text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        sys.stdout.write(body + "\n")


# -- subcommands ------------------------------------------------------------------


def cmd_analyze(args) -> int:
    spec = _spec_from_args(args)
    report = analyze(spec, args.points, _cfg(args))
    _emit(args, report.to_dict(), render_text(report))
    return EXIT_OK


def _sweep_row(spec: WalkSpec) -> dict[str, Any]:
    result = period(spec)
    return {
        "family": spec.family.value,
        "coin_type": spec.coin_type.value,
        "n": spec.n,
        "period": result.render_period(),
        "coefficient_ring": result.coefficient_ring.value,
        "cyclotomic_factorization": {str(k): str(v) for k, v in sorted(result.cyclotomic_part.items())},
    }


def sweep_specs(n_min: int, n_max: int, family: str | None = None, coin_type: str | None = None) -> list[WalkSpec]:
    families = [f for f in FAMILY_ORDER if family in (None, f.value)]
    types = [t for t in TYPE_ORDER if coin_type in (None, t.value)]
    return [WalkSpec(f, t, n) for f in families for t in types for n in range(n_min, n_max + 1)]


def sweep_rows(specs: Sequence[WalkSpec], jobs: int = 1) -> list[dict[str, Any]]:
    """Rows in spec order; ``map`` keeps that order whatever the worker count."""
    if jobs <= 1:
        return [_sweep_row(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_row, specs, chunksize=1))


def cmd_sweep(args) -> int:
    n_min = args.n_min if args.n_min is not None else (args.n if args.n is not None else 2)
    n_max = args.n_max if args.n_max is not None else (args.n if args.n is not None else n_min)
    if not 2 <= n_min <= n_max:
        raise UsageError("need 2 <= n-min <= n-max")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    rows = sweep_rows(sweep_specs(n_min, n_max, args.family, args.type), args.jobs)
    lines = [f"{'family':<10} {'type':<4} {'N':>4} {'period':>7} {'ring':<6} cyclotomic part"]
    for r in rows:
        cyc = _phi_text(r["cyclotomic_factorization"]) or "-"
        lines.append(f"{r['family']:<10} {r['coin_type']:<4} {r['n']:>4} {r['period']:>7} {r['coefficient_ring']:<6} {cyc}")
    _emit(args, {"version": SCHEMA_VERSION, "kind": "sweep", "rows": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(['all', *SUITES])}")
    checks = run_suite(args.suite, args.tol)
    status = overall_status(checks)
    lines = []
    for c in checks:
        tag = f" [{c.id}]" if c.id else ""
        lines.append(f"{c.status:<4} {c.suite:<14} {c.name}: {c.message}{tag}")
    counts = {s: sum(1 for c in checks if c.status == s) for s in ("PASS", "WARN", "FAIL")}
    lines.append(f"{status}: suite {args.suite}, {counts['PASS']} passed, {counts['WARN']} warned, {counts['FAIL']} failed")
    payload = {
        "version": SCHEMA_VERSION,
        "kind": "verify",
        "suite": args.suite,
        "status": status,
        "checks": [c.to_dict() for c in checks],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_FAIL if status == FAIL else EXIT_OK


def _form_from_args(args) -> ZetaProductForm:
    explicit = args.numer is not None or args.denom is not None
    if explicit:
        if args.family or args.type or args.n:
            raise UsageError("give either a walk (--family/--type/--n) or an explicit form, not both")
        try:
            return ZetaProductForm(args.sign, args.l, tuple(args.numer or ()), tuple(args.denom or ()))
        except ValueError as exc:
            raise UsageError(str(exc))
    spec = _spec_from_args(args)
    try:
        return zeta_of_walk(spec)
    except InfinitePeriodError as exc:
        raise UsageError(f"{exc}; eval needs a finite-period walk")


def evaluate_rows(quantity: str, form: ZetaProductForm, points: list[tuple[float, ...]], cfg: BarnesEvalConfig):
    plan = plan_absolute_zeta(form)
    rows = []
    for pt in points:
        row: dict[str, Any] = {"point": list(pt)}
        try:
            if quantity == "Z":
                est = Z_f_estimate(pt[0], pt[1], plan, cfg)
                row["value"] = est.value.real
                if est.value.imag:
                    row["imag"] = est.value.imag
                row["tol"] = est.error
            elif quantity in ("zeta", "epsilon"):
                fn = log_zeta_f_estimate if quantity == "zeta" else log_epsilon_f_estimate
                est = fn(pt[0], plan, cfg)
                value = math.exp(est.value)
                row["value"] = value
                row["tol"] = abs(value) * est.error
            else:
                est = functional_eq_residual_estimate(pt[0], plan, cfg)
                row["value"] = est.value
                row["tol"] = est.error
            row["status"] = "ok"
        except (DomainError, PoleError, AccuracyError) as exc:
            row = {"point": list(pt), "status": "error", "error": f"{type(exc).__name__}: {exc}"}
        rows.append(row)
    return rows


def cmd_eval(args) -> int:
    form = _form_from_args(args)
    if form.b < 1:
        raise UsageError("the form needs at least one denominator exponent")
    points = _parse_points(args.points, args.quantity)
    rows = evaluate_rows(args.quantity, form, points, _cfg(args))
    lines = [f"{args.quantity} for {form.render()}", f"{'point':>18} {'value':>24} {'tol':>10}"]
    for r in rows:
        where = ":".join(f"{v:g}" for v in r["point"])
        if r["status"] == "ok":
            val = f"{r['value']:.17g}" + (f"{r['imag']:+.3g}j" if "imag" in r else "")
            lines.append(f"{where:>18} {val:>24} {r['tol']:>10.2e}")
        else:
            lines.append(f"{where:>18} {r['error']}")
    payload = {
        "version": SCHEMA_VERSION,
        "kind": "eval",
        "quantity": args.quantity,
        "form": form_to_dict(form),
        "rows": rows,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if any(r["status"] == "ok" for r in rows) else EXIT_FAIL


def cmd_print_schema(args) -> int:
    args.format = "json"
    _emit(args, schema(), "")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_walk(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--type", choices=[c.value for c in CoinType])
    p.add_argument("--n", type=int)


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qwzeta {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one walk")
    _add_walk(p)
    p.add_argument("--points", type=_float_list, help="s values for the absolute-zeta table")
    p.add_argument("--tol", type=float, help="target relative tolerance for the Barnes numerics")
    _add_output(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="periods over a range of N")
    _add_walk(p)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    _add_output(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--tol", type=float, help="override the suite's pass threshold")
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="tabulate Z_f, zeta_f, epsilon_f or the functional-equation residual")
    _add_walk(p)
    p.add_argument("--quantity", choices=["Z", "zeta", "epsilon", "residual"], required=True)
    p.add_argument("--points", required=True, help="s1,s2,... or w:s,w:s,... for Z")
    p.add_argument("--sign", type=int, choices=[1, -1], default=1, help="explicit form: sign")
    p.add_argument("--l", type=int, default=0, help="explicit form: power x^(l/2)")
    p.add_argument("--numer", type=_int_list, help="explicit form: numerator exponents m")
    p.add_argument("--denom", type=_int_list, help="explicit form: denominator exponents n")
    p.add_argument("--tol", type=float, help="target relative tolerance for the Barnes numerics")
    _add_output(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("print-schema", help="print the JSON schema of all outputs")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_print_schema)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except OSError as exc:
        print(f"qwzeta: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
