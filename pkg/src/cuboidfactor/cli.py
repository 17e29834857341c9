"""Command-line interface.

Every command prints one JSON object per line (or CSV with a fixed header)
on stdout.  Exit codes: 0 success, 1 usage or parse error, 2 domain error
(singular point, inadmissible cubic, undefined branch, ...), 3 a check or
fixture that ran but failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from typing import Sequence

from .branches import (
    E21_CHOICES,
    coincidence_check,
    convert_w1_to_w2,
    convert_w2_to_w1,
    on_surface_w,
    profile_e21,
    roundtrip_check,
    solve_branch,
)
from .cubic import reduce_D
from .cuboid import CuboidTuple, check_implication, cuboid_residuals, factor_residuals, is_positive
from .errors import CuboidError, SingularityError
from .parametrization import (
    ParamPoint,
    biquadratic_residual,
    cubic_coeffs,
    d1,
    d2,
    e21_closed_form,
    e_full,
    singularities,
)
from .scalars import DEFAULT_PRECISION, EXACT, Numeric, format_scalar, is_zero, parse_rational
from .scan import CSV_HEADER, scan

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_FAILED = 0, 1, 2, 3
MIN_CLI_PRECISION = 64

# argparse only treats "-3" or "-.5" as values; extend that to "-1/2"
_NEGATIVE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+([eE][-+]?\d+)?)$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _options() -> argparse.ArgumentParser:
    opts = _Parser(add_help=False)
    opts.add_argument("--branch", type=int, choices=(1, 2), default=1)
    opts.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    opts.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    opts.add_argument("--height", type=int, default=3)
    opts.add_argument("--output", choices=("json", "csv"), default="json")
    opts.add_argument("--e21-source", choices=E21_CHOICES, default="derived")
    opts.add_argument("--d1-exponent", choices=("positive", "verbatim"), default="positive")
    opts.add_argument("--w-from-cubic", action="store_true",
                      help="manufacture an on-surface w from the cubic's own roots")
    opts.add_argument("--workers", type=int, default=1)
    opts.add_argument("--region", choices=("all", "positive"), default="all")
    return opts


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cuboidfactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_options()]
    commands = {
        "profile": (["b", "c"], "E-profile, biquadratic residual and singular factors"),
        "dparams": (["b", "c"], "both D-parameters with their coefficient cross-checks"),
        "solve": (["b", "c", "w?"], "build the branch tuple at a sextic root w"),
        "convert": (["b", "c", "w?"], "map w1 to w2 (--branch 1) or w2 to w1 (--branch 2)"),
        "roundtrip": (["b", "c", "w?"], "apply both conversions and compare with w"),
        "coincide": (["b", "c", "w?"], "compare the two branch tuples for one solution"),
        "verify": (["x1", "x2", "x3", "d1", "d2", "d3", "L"], "residuals of an explicit tuple"),
        "scan": ([], "exact scan of the parameter grid up to --height"),
        "fixtures": ([], "run the built-in fixture suite"),
    }
    for name, (positionals, help_text) in commands.items():
        p = sub.add_parser(name, parents=common, help=help_text, description=help_text)
        for pos in positionals:
            if pos.endswith("?"):
                p.add_argument(pos[:-1], nargs="?")
            else:
                p.add_argument(pos)
    return parser


# --- formatting --------------------------------------------------------------


def _fmt_all(values) -> list[str]:
    return [format_scalar(v) for v in values]


def _flatten(obj, prefix="") -> dict:
    out = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            out[name] = ";".join(str(v) for v in value)
        elif isinstance(value, bool):
            out[name] = "true" if value else "false"
        else:
            out[name] = "" if value is None else str(value)
    return out


def _emit(obj: dict, args, out) -> None:
    if args.output == "json":
        out.write(json.dumps(obj) + "\n")
        return
    flat = _flatten(obj)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(flat))
    writer.writerow(list(flat.values()))


# --- argument handling -------------------------------------------------------


def _domain(args):
    if args.mode == "exact":
        return EXACT
    if args.precision < MIN_CLI_PRECISION:
        raise UsageError(f"--precision must be at least {MIN_CLI_PRECISION}")
    return Numeric(args.precision)


def _rational(text: str, label: str):
    try:
        return parse_rational(text)
    except ValueError:
        raise UsageError(f"{label}: malformed rational {text!r}") from None


def _point(args) -> ParamPoint:
    return ParamPoint(_rational(args.b, "b"), _rational(args.c, "c"))


def _w(args, pt, branch):
    domain = _domain(args)
    if args.w_from_cubic:
        if args.w is not None:
            raise UsageError("give either w or --w-from-cubic, not both")
        return on_surface_w(pt, branch, domain.precision)
    if args.w is None:
        raise UsageError("w is required unless --w-from-cubic is given")
    return domain.lift(_rational(args.w, "w"))


# --- commands ----------------------------------------------------------------


def cmd_profile(args, out) -> int:
    pt = _point(args)
    domain = _domain(args)
    E = e_full(pt, "printed-q4variant")
    derived, provenance = profile_e21(pt)
    try:
        printed = e21_closed_form(pt, "printed-verbatim")
    except SingularityError:
        printed = None
    used = derived if args.e21_source == "derived" else e21_closed_form(pt, args.e21_source)
    lift = domain.lift
    obj = {"b": format_scalar(pt.b), "c": format_scalar(pt.c), "mode": domain.label}
    for name in ("E10", "E20", "E30", "E01", "E02", "E03"):
        obj[name] = format_scalar(lift(getattr(E, name)))
    obj["E21"] = format_scalar(lift(used))
    obj["E11"] = format_scalar(lift(E.E11))
    obj["E12"] = format_scalar(lift(E.E12))
    obj["L"] = "1"
    obj["e21_source"] = args.e21_source
    obj["E21_derived"] = format_scalar(lift(derived))
    obj["E21_derived_check"] = provenance
    obj["E21_printed"] = format_scalar(lift(printed)) if printed is not None else "undefined"
    obj["E21_mismatch"] = printed is not None and printed != derived
    obj["biquadratic"] = format_scalar(lift(biquadratic_residual(E.E10, E.E01, E.E11)))
    obj["singular"] = list(singularities(pt))
    _emit(obj, args, out)
    return EXIT_OK


def cmd_dparams(args, out) -> int:
    pt = _point(args)
    domain = _domain(args)
    obj = {"b": format_scalar(pt.b), "c": format_scalar(pt.c), "d1_exponent": args.d1_exponent}
    status = EXIT_OK
    for name, closed in (("D1", lambda: d1(pt, args.d1_exponent)), ("D2", lambda: d2(pt))):
        branch = 1 if name == "D1" else 2
        try:
            value = closed()
        except CuboidError as exc:
            obj[name] = "undefined"
            obj[f"{name}_error"] = str(exc)
            status = EXIT_DOMAIN
            continue
        obj[name] = format_scalar(domain.lift(value))
        try:
            check = reduce_D(cubic_coeffs(pt, branch)).value
            obj[f"{name}_crosscheck"] = format_scalar(domain.lift(check))
            obj[f"{name}_agrees"] = check == value
        except CuboidError as exc:
            obj[f"{name}_crosscheck"] = "undefined"
            obj[f"{name}_agrees"] = None
            obj[f"{name}_error"] = str(exc)
    _emit(obj, args, out)
    return status


def cmd_solve(args, out) -> int:
    pt = _point(args)
    w = _w(args, pt, args.branch)
    kw = {"e21_source": args.e21_source} if args.branch == 1 else {}
    sol = solve_branch(pt, w, args.branch, **kw)
    diag = sol.diagnostics
    t = sol.tuple
    tol = 0 if t.exact else Numeric(args.precision).tolerance
    obj = {
        "b": format_scalar(pt.b),
        "c": format_scalar(pt.c),
        "branch": sol.branch,
        "mode": sol.mode,
        "w": format_scalar(sol.w),
        "x": _fmt_all(t.x),
        "d": _fmt_all(t.d),
        "L": format_scalar(t.L),
        "factor_residuals": _fmt_all(diag.factor_residuals),
        "cuboid_residuals": _fmt_all(diag.cuboid_residuals),
        "profile_residuals": {k: format_scalar(v) for k, v in diag.profile_residuals.items()},
        "sextic_residual": format_scalar(diag.sextic_residual),
        "residual_max": format_scalar(diag.residual_max),
        "verified": diag.residual_max <= tol,
        "e21_source": sol.e21_source if sol.branch == 1 else "n/a",
        "E21_derived": format_scalar(diag.e21_reference),
        "E21_printed": format_scalar(diag.e21_printed) if diag.e21_printed is not None else "undefined",
        "E21_mismatch": diag.e21_mismatch,
        "pairing_ambiguous": sol.pairing_ambiguous,
        "positive": is_positive(t),
        "notes": list(sol.notes),
    }
    _emit(obj, args, out)
    return EXIT_OK


def cmd_convert(args, out) -> int:
    pt = _point(args)
    w = _w(args, pt, args.branch)
    if args.branch == 1:
        converted = convert_w1_to_w2(pt, w, e21_source=args.e21_source)
    else:
        converted = convert_w2_to_w1(pt, w)
    obj = {
        "b": format_scalar(pt.b),
        "c": format_scalar(pt.c),
        "from_branch": args.branch,
        "w": format_scalar(w),
        "converted": format_scalar(converted),
    }
    _emit(obj, args, out)
    return EXIT_OK


def _passes(values) -> bool:
    return all(is_zero(v) for v in values)


def cmd_roundtrip(args, out) -> int:
    pt = _point(args)
    w = _w(args, pt, args.branch)
    residual = roundtrip_check(pt, w, args.branch, e21_source=args.e21_source)
    ok = _passes([residual])
    obj = {
        "b": format_scalar(pt.b),
        "c": format_scalar(pt.c),
        "branch": args.branch,
        "w": format_scalar(w),
        "residual": format_scalar(residual),
        "passed": ok,
    }
    _emit(obj, args, out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_coincide(args, out) -> int:
    pt = _point(args)
    w1 = _w(args, pt, 1)
    report = coincidence_check(pt, w1, e21_source=args.e21_source)
    ok = _passes(report.differences)
    obj = {
        "b": format_scalar(pt.b),
        "c": format_scalar(pt.c),
        "w1": format_scalar(w1),
        "w2": format_scalar(report.second.w),
        "dx": _fmt_all(report.dx),
        "dd": _fmt_all(report.dd),
        "max_difference": format_scalar(report.max_difference),
        "passed": ok,
    }
    _emit(obj, args, out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args, out) -> int:
    names = ("x1", "x2", "x3", "d1", "d2", "d3", "L")
    t = CuboidTuple(*(_rational(getattr(args, n), n) for n in names))
    p = cuboid_residuals(t)
    f = factor_residuals(t)
    report = check_implication(t)
    obj = {
        "tuple": _fmt_all(t.components()),
        "cuboid_residuals": {f"p{i}": format_scalar(v) for i, v in enumerate(p)},
        "factor_residuals": {f"f{i}": format_scalar(v) for i, v in enumerate(f, 1)},
        "positive": report.positive,
        "factor_zero": report.factor_zero,
        "cuboid_zero": report.cuboid_zero,
        "implication_holds": report.implication_holds,
    }
    _emit(obj, args, out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    if args.height < 1:
        raise UsageError("--height must be at least 1")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    records = scan(args.height, region=args.region, workers=args.workers, e21_source=args.e21_source)
    if args.output == "json":
        for rec in records:
            out.write(rec.to_json() + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.csv_row())
    return EXIT_OK


def cmd_fixtures(args, out) -> int:
    from .fixtures import FixtureConfig, run_fixtures

    cfg = FixtureConfig(
        e21_source=args.e21_source, d1_exponent=args.d1_exponent, precision=args.precision
    )
    results = run_fixtures(cfg)
    for r in results:
        _emit({"fixture": r.name, "passed": r.passed, "detail": r.detail}, args, out)
    failed = [r for r in results if not r.passed]
    summary = {"fixtures": len(results), "failed": len(failed)}
    _emit(summary, args, out)
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "profile": cmd_profile,
    "dparams": cmd_dparams,
    "solve": cmd_solve,
    "convert": cmd_convert,
    "roundtrip": cmd_roundtrip,
    "coincide": cmd_coincide,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "fixtures": cmd_fixtures,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CuboidError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI in-process; returns ``(exit_code, stdout, stderr)``."""
    import io

    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()
