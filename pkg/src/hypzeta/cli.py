"""Command-line front end.

Every operation of the library is reachable as a subcommand; every
subcommand honors --json and emits a Report whose checks carry both
sides of each comparison and the tolerance actually applied. Exit codes:
0 success, 1 usage error, 2 numerical failure (pole, divergence, bad
domain), 3 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import euler_product, length_spectrum, verify, zeta_factors
from .errors import HypzetaError
from .scattering import BUILTIN_MODEL_LABELS, builtin_model, phi_leading_at_zero
from .special_functions import EvalOptions
from .surface import Signature, area, constants, order_R, order_Z, parse_signature

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; we use 1
        raise UsageError(message)


def _encode(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


@dataclass
class Report:
    command: str
    inputs: dict
    results: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, value):
        self.results.append({"name": name, "value": value})

    def to_dict(self):
        return {
            "command": self.command,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "inputs": _encode(self.inputs),
            "results": _encode(self.results),
            "checks": _encode(self.checks),
            "notes": list(self.notes),
        }


def _print_human(report: Report, stream=None):
    stream = stream if stream is not None else sys.stdout
    print(f"[{report.command}]", file=stream)
    for key, value in report.inputs.items():
        print(f"  input {key} = {value}", file=stream)
    for item in report.results:
        print(f"  {item['name']} = {item['value']}", file=stream)
    if report.checks:
        failed = [c for c in report.checks if not c["passed"]]
        print(f"  checks: {len(report.checks) - len(failed)}/{len(report.checks)} passed", file=stream)
        for c in failed:
            print(
                f"    FAIL {c['name']}: lhs={c['lhs']} rhs={c['rhs']} "
                f"|diff|={c['abs_diff']} tol={c['tolerance']}",
                file=stream,
            )
    for note in report.notes:
        print(f"  note: {note}", file=stream)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"expected a complex number as RE,IM (got {text!r})")


def _load_config(path: str) -> dict:
    allowed = {"rel_tol": float, "gamma2_cutoff": int, "euler_max_trace": int}
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line is not key = value: {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in allowed:
            raise UsageError(f"unknown config key {key!r}")
        try:
            out[key] = allowed[key](value.strip())
        except ValueError:
            raise UsageError(f"bad value for config key {key!r}: {value.strip()!r}")
    return out


def _options_from_args(args) -> EvalOptions:
    values = {}
    if getattr(args, "config", None):
        values.update(_load_config(args.config))
    if getattr(args, "rel_tol", None) is not None:
        values["rel_tol"] = args.rel_tol
    if getattr(args, "gamma2_cutoff", None) is not None:
        values["gamma2_cutoff"] = args.gamma2_cutoff
    if getattr(args, "max_trace", None) is not None:
        values["euler_max_trace"] = args.max_trace
    try:
        return EvalOptions(**{**EvalOptions().__dict__, **values})
    except ValueError as exc:
        raise UsageError(str(exc))


def _model_for(args, sig: Signature):
    label = getattr(args, "group", None)
    if label is None:
        label = {0: "trivial", 1: "modular"}.get(sig.n)
        if label is None:
            raise UsageError(
                f"no bundled scattering model has {sig.n} cusps; pass --group"
            )
    model = builtin_model(label)
    if model.n != sig.n:
        raise UsageError(
            f"model {label!r} has {model.n} cusps but signature {sig.label()} has {sig.n}"
        )
    return model


def _spectrum_for(args, max_trace: int, report: Report):
    cache = getattr(args, "cache", None)
    if cache:
        cached = length_spectrum.read_cache(cache, max_trace)
        if cached is not None:
            report.inputs["cache_status"] = "hit"
            return cached
    spectrum = length_spectrum.enumerate_spectrum(max_trace)
    if cache:
        length_spectrum.write_cache(spectrum, cache)
        report.inputs["cache_status"] = "miss"
    return spectrum


# ---------------------------------------------------------------------------
# subcommand handlers: populate a Report, return exit code
# ---------------------------------------------------------------------------


def _cmd_surface_info(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    report = Report("surface info", {"signature": sig.label()})
    report.add("area", area(sig))
    report.add("area_over_2pi", float(sig.normalized_area()))
    try:
        model = _model_for(args, sig)
    except UsageError:
        report.notes.append(
            "no scattering model resolvable for this cusp count; "
            "reporting geometric data only"
        )
        report.add("B", -float(sig.normalized_area()))
        report.add("C", -sig.n * math.log(2.0))
        return report, 0
    c = constants(sig, model)
    report.inputs["group"] = model.label
    for name in ("A", "B", "C", "D", "log_E"):
        report.add(name, getattr(c, name))
    return report, 0


def _cmd_orders(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    model = _model_for(args, sig)
    lo, hi = args.from_point, args.to_point
    if lo > hi:
        raise UsageError("--from must not exceed --to")
    report = Report(
        "orders",
        {"signature": sig.label(), "group": model.label, "from": lo, "to": hi},
    )
    table = []
    for point in range(lo, hi + 1):
        row = {"point": point, "order_R": order_R(sig, model.n0, point)}
        try:
            row["order_Z"] = order_Z(sig, model.n0, point)
        except HypzetaError:
            row["order_Z"] = None
        table.append(row)
        if point < 0:
            half = point + 0.5
            table.append({"point": half, "order_Z": order_Z(sig, model.n0, half)})
    table.sort(key=lambda row: row["point"])
    report.add("orders", table)
    return report, 0


def _cmd_kappa(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    model = _model_for(args, sig)
    opts = _options_from_args(args)
    s = _parse_complex(args.s)
    value = zeta_factors.kappa(sig, model, s, opts)
    report = Report(
        "kappa", {"signature": sig.label(), "group": model.label, "s": s}
    )
    report.add("kappa", value.value)
    report.add("log_kappa", value.log_value)
    return report, 0


def _cmd_det_laplacian(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    model = _model_for(args, sig)
    opts = _options_from_args(args)
    s = _parse_complex(args.s)
    report = Report(
        "det-laplacian", {"signature": sig.label(), "group": model.label, "s": s}
    )
    if args.z_value is not None:
        z_value = _parse_complex(args.z_value)
        report.inputs["z_value"] = z_value
        report.inputs["z_source"] = "probe"
    else:
        spectrum = _spectrum_for(args, opts.euler_max_trace, report)
        truncated = euler_product.selberg_Z(spectrum, s, opts)
        z_value = truncated.value
        report.inputs["z_source"] = f"euler_product(max_trace={spectrum.max_trace})"
        report.add("Z", z_value)
        report.add("Z_abs_error_estimate", truncated.abs_error_estimate)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = zeta_factors.det_laplacian(sig, model, s, z_value, opts)
    for w in caught:
        report.notes.append(str(w.message))
    report.add("det_laplacian", value)
    return report, 0


def _cmd_ruelle_leading(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    model = _model_for(args, sig)
    order, coeff = zeta_factors.ruelle_leading_at_zero(sig, model)
    report = Report(
        "ruelle-leading", {"signature": sig.label(), "group": model.label}
    )
    report.add("order", order)
    report.add("coefficient", coeff)
    report.add("abs_coefficient", abs(coeff))
    if model.label == "modular":
        fitted_n0, fitted = phi_leading_at_zero(model)
        report.add("phi_leading_fitted", fitted)
        report.add("phi_leading_stored", model.phi_tilde_0)
        if math.copysign(1.0, fitted) != math.copysign(1.0, model.phi_tilde_0):
            report.notes.append(
                "sign discrepancy: direct expansion of phi at 0 gives "
                f"{fitted:.12g}, the stored convention is {model.phi_tilde_0:.12g}; "
                "magnitudes agree and the reported coefficient uses the stored sign"
            )
    return report, 0


def _cmd_constants(args) -> tuple[Report, int]:
    sig = parse_signature(args.signature)
    model = _model_for(args, sig)
    c = constants(sig, model)
    report = Report(
        "constants", {"signature": sig.label(), "group": model.label}
    )
    for name in ("area", "A", "B", "C", "D", "log_E"):
        report.add(name, getattr(c, name))
    report.add("E", math.exp(c.log_E))
    report.add("c1", zeta_factors.c1(sig, model))
    report.add("c0", zeta_factors.c0(sig, model))
    return report, 0


def _cmd_spectrum(args) -> tuple[Report, int]:
    report = Report("spectrum", {"max_trace": args.max_trace})
    if args.max_trace < 3:
        raise UsageError("--max-trace must be at least 3")
    spectrum = _spectrum_for(args, args.max_trace, report)
    rows = [
        {"trace": sh.trace, "count": sh.count, "length": sh.length, "norm": sh.norm}
        for sh in spectrum.shells
    ]
    report.add("class_count", spectrum.class_count)
    report.add("shells", rows)
    return report, 0


def _print_spectrum_csv(report: Report):
    print("trace,count,length,norm")
    shells = next(item["value"] for item in report.results if item["name"] == "shells")
    for row in shells:
        print(f"{row['trace']},{row['count']},{row['length']!r},{row['norm']!r}")


def _cmd_euler(args, which: str) -> tuple[Report, int]:
    opts = _options_from_args(args)
    s = _parse_complex(args.s)
    max_trace = args.max_trace if args.max_trace is not None else opts.euler_max_trace
    report = Report(which, {"s": s, "max_trace": max_trace})
    spectrum = _spectrum_for(args, max_trace, report)
    if which == "zeta":
        truncated = euler_product.selberg_Z(spectrum, s, opts)
    else:
        method = getattr(args, "method", "quotient")
        report.inputs["method"] = method
        truncated = euler_product.ruelle_R(spectrum, s, opts, method=method)
    report.add("value", truncated.value)
    report.add("abs_error_estimate", truncated.abs_error_estimate)
    report.add("k_cutoff_used", truncated.k_cutoff_used)
    if truncated.abs_error_estimate > 0.01 * abs(truncated.value):
        report.notes.append(
            "truncation estimate exceeds 1% of the value; increase "
            "--max-trace or move s away from the convergence boundary"
        )
    return report, 0


def _cmd_verify(args) -> tuple[Report, int]:
    opts = _options_from_args(args)
    outcome = verify.run_verify(opts, tolerance=args.tolerance)
    report = Report(
        "verify",
        {
            "points_version": outcome["points_version"],
            "options": outcome["options"],
            "tolerance_override": outcome["tolerance_override"],
        },
    )
    for name, checks in outcome["sections"].items():
        report.checks.extend({**c, "name": f"{name}: {c['name']}"} for c in checks)
    sign = outcome["phi_leading_sign_report"]
    report.add("phi_leading_sign_report", sign)
    report.add("total_checks", outcome["total_checks"])
    report.add("failed_checks", outcome["failed_checks"])
    if not sign["signs_agree"]:
        report.notes.append(sign["note"])
    return report, (0 if outcome["passed"] else 3)


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def _add_common(sp, signature=False, group=False, s=False, euler=False):
    sp.add_argument("--json", action="store_true", help="emit the report as JSON")
    sp.add_argument("--config", help="key = value options file")
    sp.add_argument("--rel-tol", type=float, dest="rel_tol")
    sp.add_argument("--gamma2-cutoff", type=int, dest="gamma2_cutoff")
    if signature:
        sp.add_argument("--signature", required=True, help="surface as g,n,m1:m2:...:mv")
    if group:
        sp.add_argument("--group", choices=BUILTIN_MODEL_LABELS,
                        help="scattering model (default: by cusp count)")
    if s:
        sp.add_argument("--s", required=True, help="evaluation point as RE,IM")
    if euler:
        sp.add_argument("--max-trace", type=int, dest="max_trace",
                        help="length-spectrum completeness bound")
        sp.add_argument("--cache", help="CSV spectrum cache path")


def build_parser() -> _Parser:
    parser = _Parser(prog="hypzeta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    surface_p = sub.add_parser("surface", help="surface-level data")
    surface_sub = surface_p.add_subparsers(dest="surface_command", required=True)
    info = surface_sub.add_parser("info", help="area and determinant constants")
    _add_common(info, signature=True, group=True)
    info.set_defaults(handler=_cmd_surface_info)

    orders = sub.add_parser("orders", help="order tables for Z and R")
    _add_common(orders, signature=True, group=True)
    orders.add_argument("--from", type=int, required=True, dest="from_point")
    orders.add_argument("--to", type=int, required=True, dest="to_point")
    orders.set_defaults(handler=_cmd_orders)

    kappa_p = sub.add_parser("kappa", help="functional-equation multiplier")
    _add_common(kappa_p, signature=True, group=True, s=True)
    kappa_p.set_defaults(handler=_cmd_kappa)

    det = sub.add_parser("det-laplacian", help="closed-form determinant value")
    _add_common(det, signature=True, group=True, s=True, euler=True)
    det.add_argument("--z-value", dest="z_value",
                     help="probe value for Z(s) as RE,IM (skips the Euler product)")
    det.set_defaults(handler=_cmd_det_laplacian)

    leading = sub.add_parser("ruelle-leading", help="order and leading coefficient at 0")
    _add_common(leading, signature=True, group=True)
    leading.set_defaults(handler=_cmd_ruelle_leading)

    consts = sub.add_parser("constants", help="A, B, C, D, E, c0, c1")
    _add_common(consts, signature=True, group=True)
    consts.set_defaults(handler=_cmd_constants)

    spectrum_p = sub.add_parser("spectrum", help="geodesic length spectrum table")
    _add_common(spectrum_p)
    spectrum_p.add_argument("--max-trace", type=int, required=True, dest="max_trace")
    spectrum_p.add_argument("--cache", help="CSV spectrum cache path")
    spectrum_p.set_defaults(handler=_cmd_spectrum)

    zeta_p = sub.add_parser("zeta", help="truncated Selberg product (Re s > 1)")
    _add_common(zeta_p, s=True, euler=True)
    zeta_p.set_defaults(handler=lambda args: _cmd_euler(args, "zeta"))

    ruelle_p = sub.add_parser("ruelle", help="truncated Ruelle product (Re s > 1)")
    _add_common(ruelle_p, s=True, euler=True)
    ruelle_p.add_argument("--method", choices=("quotient", "direct"), default="quotient")
    ruelle_p.set_defaults(handler=lambda args: _cmd_euler(args, "ruelle"))

    verify_p = sub.add_parser("verify", help="run the full identity suite")
    _add_common(verify_p)
    verify_p.add_argument("--tolerance", type=float,
                          help="override every non-exact check tolerance")
    verify_p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = args.handler(args)
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        if argv is not None and "--json" in argv:
            print(json.dumps({"error": {"kind": "usage", "message": str(exc)}}))
        return 1
    except HypzetaError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        if argv is not None and "--json" in argv:
            print(json.dumps({
                "error": {"kind": type(exc).__name__, "message": str(exc)}
            }))
        return 2
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    elif report.command == "spectrum":
        _print_spectrum_csv(report)
        for note in report.notes:
            print(f"note: {note}", file=sys.stderr)
    else:
        _print_human(report)
    if code == 3:
        print("verification suite FAILED", file=sys.stderr)
    return code


def main():  # console-script entry point
    sys.exit(run(sys.argv[1:]))
