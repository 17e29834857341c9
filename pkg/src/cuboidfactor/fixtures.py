"""Built-in fixture suite: worked examples for every public operation.

Run with ``cuboidfactor fixtures``.  Two switches re-run the suite under the
alternative readings of the published formulas, which is how the readings
are adjudicated:

* ``e21_source`` other than ``"derived"`` makes the branch-1 linear system use
  a closed-form E21; the (1, 1) checks then fail.
* ``d1_exponent="verbatim"`` makes the closed-form D1 disagree with the
  coefficient cross-check away from ``c = 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .branches import (
    coincidence_check,
    convert_w1_to_w2,
    convert_w2_to_w1,
    derive_pairing,
    on_surface_w,
    profile_e21,
    roundtrip_check,
    solve_branch1,
    solve_branch2,
)
from .cubic import (
    CubicCoeffs,
    D_from_roots,
    Violation,
    admissibility,
    cleared_sextic,
    cubic_roots_from_w,
    reduce_D,
    reduced_roots,
    sextic_residual,
    sextic_roots_from_cubic_roots,
    w_from_roots,
)
from .cuboid import (
    S3,
    CuboidTuple,
    apply_permutation,
    check_implication,
    cuboid_residuals,
    e_profile,
    factor_residuals,
    search_positive_factor_solutions,
)
from .errors import (
    AdmissibilityError,
    ConversionSingularError,
    CuboidError,
    DegenerateParameterError,
    PairingError,
    SingularityError,
)
from .parametrization import (
    ParamPoint,
    biquadratic_residual,
    cubic_coeffs,
    d1,
    d2,
    e21_closed_form,
    e_full,
    e_linear,
)
from .polynomials import IntPolynomial, rational_roots, real_roots, to_integer_polynomial
from .scalars import DEFAULT_PRECISION, Numeric, is_zero

F = Fraction


@dataclass(frozen=True)
class FixtureConfig:
    e21_source: str = "derived"
    d1_exponent: str = "positive"
    precision: int = DEFAULT_PRECISION


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str = ""


class FixtureFailure(AssertionError):
    pass


_REGISTRY: list[tuple[str, Callable[[FixtureConfig], None]]] = []


def fixture(name: str):
    def register(fn):
        _REGISTRY.append((name, fn))
        return fn

    return register


def expect(condition, message: str) -> None:
    if not condition:
        raise FixtureFailure(message)


def expect_error(exc_type, fn, *args, contains: str = "", **kwargs) -> None:
    try:
        fn(*args, **kwargs)
    except exc_type as exc:
        expect(contains in str(exc), f"message {str(exc)!r} lacks {contains!r}")
        return
    raise FixtureFailure(f"expected {exc_type.__name__}")


def _close(a, b, cfg: FixtureConfig) -> bool:
    return is_zero(a - b, abs(b) + 1)


def _all_close(xs, ys, cfg) -> bool:
    return all(_close(a, b, cfg) for a, b in zip(xs, ys, strict=True))


def _sqrt7(cfg):
    return Numeric(cfg.precision).ctx.sqrt(7)


def _fixture_11(cfg):
    """Edges, face diagonals and w's of the (1, 1) worked solution."""
    s7 = _sqrt7(cfg)
    x = ((1 + s7) / 4, (1 - s7) / 4, 0 * s7)
    d = ((1 - s7) / 4, (1 + s7) / 4, -1 + 0 * s7)
    return x, d, -3 * s7, 3 * s7 / 5


# --- scalar core ---------------------------------------------------------------


@fixture("to_integer_polynomial clears denominators")
def _(cfg):
    expect(to_integer_polynomial([F(1, 2), F(-1, 3), 1]) == (IntPolynomial.of(3, -2, 6), F(1, 6)), "[1/2,-1/3,1]")
    expect(to_integer_polynomial([0, 0, 1]) == (IntPolynomial.of(0, 0, 1), F(1)), "[0,0,1]")
    expect(to_integer_polynomial([F(2, 4), F(1, 2)]) == (IntPolynomial.of(1, 1), F(1, 2)), "[2/4,1/2]")


@fixture("rational_roots")
def _(cfg):
    expect(rational_roots(IntPolynomial.of(-1, -1, 6)) == [F(-1, 3), F(1, 2)], "6x^2-x-1")
    expect(rational_roots(IntPolynomial.of(1, 0, 1)) == [], "x^2+1")
    got = rational_roots(cleared_sextic(F(-400, 9261)))
    expect(got == sorted(F(v) for v in ("3/5", "-3/5", "3/2", "-3/2", "9", "-9")), f"sextic roots {got}")


@fixture("real_roots")
def _(cfg):
    s7 = _sqrt7(cfg)
    expect(_all_close(real_roots(IntPolynomial.of(-7, 0, 1), cfg.precision), (-s7, s7), cfg), "x^2-7")
    got = real_roots(IntPolynomial.of(0, -3, -4, 8), cfg.precision)
    expect(_all_close(got, ((1 - s7) / 4, 0 * s7, (1 + s7) / 4), cfg), "8x^3-4x^2-3x")
    expect(real_roots(IntPolynomial.of(1, 0, 1), cfg.precision) == [], "x^2+1")


# --- cuboid model ----------------------------------------------------------------


@fixture("cuboid_residuals")
def _(cfg):
    expect(cuboid_residuals(CuboidTuple(0, 0, 0, 0, 0, 0, 0)) == (0, 0, 0, 0), "zero tuple")
    expect(cuboid_residuals(CuboidTuple(F(3, 5), F(4, 5), 0, F(4, 5), F(3, 5), 1, 1)) == (0, 0, 0, 0), "3/5,4/5")
    expect(cuboid_residuals(CuboidTuple(1, 1, 1, 1, 1, 1, 1)) == (2, 1, 1, 1), "all ones")


@fixture("factor_residuals")
def _(cfg):
    expect(all(v == 0 for v in factor_residuals(CuboidTuple(F(3, 5), F(4, 5), 0, F(4, 5), F(3, 5), 1, 1))), "3/5,4/5")
    expect(factor_residuals(CuboidTuple(1, 0, 0, 0, 0, 0, 1)) == (0, 2, 0, 0, 0, 0, 0, 0), "(1,0,0|0,0,0|1)")
    _, _, w1, _ = _fixture_11(cfg)
    sol = solve_branch1((1, 1), w1, e21_source=cfg.e21_source)
    expect(all(is_zero(v) for v in factor_residuals(sol.tuple)), "branch-1 tuple at (1,1)")


@fixture("implication probe")
def _(cfg):
    r = check_implication(CuboidTuple(F(3, 5), F(4, 5), 0, F(4, 5), F(3, 5), 1, 1))
    expect(not r.positive and r.implication_holds, "degenerate tuple")
    r = check_implication(CuboidTuple(1, 1, 1, 1, 1, 1, 1))
    expect(not r.factor_zero and r.implication_holds, "all ones")
    report = search_positive_factor_solutions(20)
    expect(report.clean, f"counterexamples {report.counterexamples}")


@fixture("e_profile")
def _(cfg):
    E = e_profile(CuboidTuple(1, 1, 1, 1, 1, 1, 1))
    expect((E.E10, E.E20, E.E30, E.E01, E.E02, E.E03, E.E21, E.E11, E.E12) == (3, 3, 1, 3, 3, 1, 3, 6, 3), "ones")
    E = e_profile(CuboidTuple(1, 2, 3, 0, 0, 0, 1))
    expect((E.E10, E.E20, E.E30, E.E01, E.E21, E.E11, E.E12) == (6, 11, 6, 0, 0, 0, 0), "d=0")
    E = e_profile(CuboidTuple(1, 2, 3, 4, 5, 6, 1))
    expect((E.E11, E.E21, E.E12) == (58, 51, 138), "x=(1,2,3), d=(4,5,6)")


@fixture("apply_permutation")
def _(cfg):
    t = CuboidTuple(1, 2, 3, 4, 5, 6, 1)
    expect(apply_permutation((1, 2, 3), t) == t, "identity")
    expect(apply_permutation((2, 1, 3), t) == CuboidTuple(2, 1, 3, 5, 4, 6, 1), "swap")
    expect(all(e_profile(apply_permutation(s, t)) == e_profile(t) for s in S3), "profile invariance")


# --- cubic and sextic ---------------------------------------------------------------


@fixture("admissibility")
def _(cfg):
    expect(admissibility(CubicCoeffs(1, -7, 14, -8)) is None, "{1,2,4}")
    expect(admissibility(CubicCoeffs(1, -3, 2, 0)) is Violation.ARITHMETIC_PROGRESSION, "{0,1,2}")
    expect(admissibility(CubicCoeffs(0, 1, 1, 1)) is Violation.LEADING_ZERO, "A3=0")


@fixture("reduce_D and D_from_roots")
def _(cfg):
    expect(reduce_D(CubicCoeffs(1, -7, 14, -8)).value == F(-400, 9261), "{1,2,4}")
    expect(reduce_D(CubicCoeffs(1, F(-1, 2), F(-3, 8), 0)).value == F(-1922, 35937), "(1,1) edge cubic")
    expect_error(AdmissibilityError, reduce_D, CubicCoeffs(1, -3, 2, 0))
    expect(D_from_roots(1, 2, 4).value == F(-400, 9261), "roots {1,2,4}")
    x, d, _, _ = _fixture_11(cfg)
    expect(_close(D_from_roots(*x).value, F(-1922, 35937), cfg), "edge roots at (1,1)")
    expect(_close(D_from_roots(*d).value, F(-18050, 328509), cfg), "face-diagonal roots at (1,1)")


@fixture("sextic_residual")
def _(cfg):
    expect(sextic_residual(F(-400, 9261), F(3, 5)) == 0, "D=-400/9261, w=3/5")
    expect(sextic_residual(F(-4, 27), 0) == 0, "D=-4/27, w=0")
    expect(sextic_residual(F(-400, 9261), 1) == F(-25600, 9261), "w=1")


@fixture("reduced_roots")
def _(cfg):
    expect(reduced_roots(F(0)) == (F(-2, 3), F(-2, 3), F(1, 3)), "w=0")
    expect(reduced_roots(F(-3, 5)) == (F(-5, 21), F(-20, 21), F(4, 21)), "w=-3/5")
    expect(reduced_roots(F(1)) == (-1, 0, 0), "w=1")


@fixture("cubic_roots_from_w")
def _(cfg):
    A = CubicCoeffs(1, -7, 14, -8)
    expect(cubic_roots_from_w(A, F(-3, 5)) == (1, 2, 4), "w=-3/5")
    expect(cubic_roots_from_w(A, F(3, 5)) == (2, 1, 4), "w=3/5")
    expect(cubic_roots_from_w(A, F(3, 2)) == (2, 4, 1), "w=3/2")


@fixture("sextic_roots_from_cubic_roots")
def _(cfg):
    table = sextic_roots_from_cubic_roots(1, 2, 4)
    expect(table.roots == tuple(F(v) for v in ("-3/5", "3/5", "3/2", "-3/2", "-9", "9")), "roots of {1,2,4}")
    expect_error(AdmissibilityError, sextic_roots_from_cubic_roots, 0, 1, 2)
    x, _, w1, _ = _fixture_11(cfg)
    expect(_close(sextic_roots_from_cubic_roots(*x).roots[0], w1, cfg), "-3 sqrt 7")


@fixture("w_from_roots")
def _(cfg):
    expect(w_from_roots(1, 2, 4) == F(-3, 5), "(1,2,4)")
    expect(w_from_roots(F(2, 7), F(2, 7), 5) == 0, "(a,a,b)")
    x, _, w1, _ = _fixture_11(cfg)
    expect(_close(w_from_roots(*x), w1, cfg), "(1,1) edges")


# --- parametrization ------------------------------------------------------------------


@fixture("e_linear")
def _(cfg):
    expect(e_linear(ParamPoint(1, 1)) == (F(1, 2), F(-1, 2), F(1, 2)), "(1,1)")
    expect(e_linear(ParamPoint(0, 5)) == (1, 0, 0), "(0,5)")
    expect_error(SingularityError, e_linear, ParamPoint(0, 0), contains="Q1")


@fixture("e_full and the E21 readings")
def _(cfg):
    E = e_full(ParamPoint(1, 1))
    expect((E.E20, E.E30, E.E02, E.E03, E.E12) == (F(-3, 8), 0, F(-7, 8), F(3, 8), -1), "(1,1)")
    expect(e21_closed_form(ParamPoint(1, 1), "printed-verbatim") == F(-7, 24), "printed E21 at (1,1)")
    derived, _ = profile_e21((1, 1))
    expect(derived == F(3, 8), "derived E21 at (1,1)")
    if cfg.e21_source != "derived":
        used = e21_closed_form(ParamPoint(1, 1), cfg.e21_source)
        expect(used == derived, f"E21 source {cfg.e21_source} gives {used} at (1,1), profile forces {derived}")
    E = e_full(ParamPoint(0, 3))
    expect((E.E30, E.E21, E.E03, E.E02, E.E12, E.E20) == (0, 0, 0, -1, -1, 0), "(0,3)")


@fixture("biquadratic_residual")
def _(cfg):
    expect(biquadratic_residual(F(1, 2), F(-1, 2), F(1, 2), 1) == 0, "(1,1)")
    expect(biquadratic_residual(1, 0, 0, 1) == 0, "b=0")
    expect(biquadratic_residual(0, 0, 0, 1) == 1, "zeros")


@fixture("d_parameters")
def _(cfg):
    expect(d1(ParamPoint(1, 1), cfg.d1_exponent) == F(-1922, 35937), "D1 at (1,1)")
    expect(d2(ParamPoint(1, 1)) == F(-18050, 328509), "D2 at (1,1)")
    expect(d1(ParamPoint(0, 3), cfg.d1_exponent) == F(-4, 27), "D1 at (0,3)")
    expect(d2(ParamPoint(0, 3)) == 0, "D2 at (0,3)")
    for pt in (ParamPoint(F(2, 3), F(-5, 7)), ParamPoint(3, F(1, 4)), ParamPoint(F(-7, 3), F(11, 5))):
        closed = d1(pt, cfg.d1_exponent)
        check = reduce_D(cubic_coeffs(pt, 1)).value
        expect(closed == check, f"D1 cross-check at {pt}: closed form {closed}, coefficients {check}")
        expect(d2(pt) == reduce_D(cubic_coeffs(pt, 2)).value, f"D2 cross-check at {pt}")


@fixture("cubic_coeffs")
def _(cfg):
    expect(cubic_coeffs(ParamPoint(1, 1), 1) == (1, F(-1, 2), F(-3, 8), 0), "(1,1) branch 1")
    expect(cubic_coeffs(ParamPoint(1, 1), 2) == (1, F(1, 2), F(-7, 8), F(-3, 8)), "(1,1) branch 2")
    expect(cubic_coeffs(ParamPoint(0, 3), 1) == (1, -1, 0, 0), "(0,3) branch 1")


# --- branch solutions ---------------------------------------------------------------


@fixture("solve_branch1")
def _(cfg):
    sol = solve_branch1((0, 2), F(0), e21_source=cfg.e21_source)
    expect(sol.tuple == CuboidTuple(0, 0, 1, -1, 1, 0, 1), f"b=0 tuple {sol.tuple}")
    expect(all(v == 0 for v in sol.diagnostics.factor_residuals), "b=0 residuals")
    x, d, w1, _ = _fixture_11(cfg)
    sol = solve_branch1((1, 1), w1, e21_source=cfg.e21_source)
    expect(_all_close(sol.tuple.x, x, cfg), "(1,1) edges")
    expect(_all_close(sol.tuple.d, d, cfg), f"(1,1) face diagonals {[float(v) for v in sol.tuple.d]}")
    expect_error(DegenerateParameterError, solve_branch1, (1, 1), F(1))


@fixture("solve_branch2")
def _(cfg):
    x, d, w1, w2 = _fixture_11(cfg)
    sol = solve_branch2((1, 1), w2)
    expect(_all_close(sorted(sol.tuple.d), sorted(d), cfg), "(1,1) face-diagonal multiset")
    expect(_all_close(sol.tuple.x, x, cfg), "(1,1) edges")
    expect_error(AdmissibilityError, solve_branch2, (0, 2), F(0))
    expect_error(DegenerateParameterError, solve_branch2, (1, 1), F(-1))


@fixture("derive_pairing")
def _(cfg):
    x, d, _, _ = _fixture_11(cfg)
    p = derive_pairing(x, sorted(d), F(1, 2), -1)
    expect(_all_close(p.alignment, d, cfg) and not p.ambiguous, "(1,1) alignment")
    expect(_close(p.e21, F(3, 8), cfg), "(1,1) E21")
    p = derive_pairing((0, 0, 1), (-1, 0, 1), 0, -1)
    expect(p.alignment == (-1, 1, 0) and p.e21 == 0, "b=0 alignment")
    expect(all(m[2] == 0 and sorted(m[:2]) == [-1, 1] for m in p.matches), "b=0 matches")
    expect_error(PairingError, derive_pairing, x, sorted(d), F(3, 2), -1, contains="profile inconsistent")


@fixture("conversions")
def _(cfg):
    _, _, w1, w2 = _fixture_11(cfg)
    expect(_close(convert_w1_to_w2((1, 1), w1, e21_source=cfg.e21_source), w2, cfg), "w1 -> w2")
    expect(_close(convert_w2_to_w1((1, 1), w2), w1, cfg), "w2 -> w1")
    expect_error(ConversionSingularError, convert_w1_to_w2, (0, 2), F(0), e21_source=cfg.e21_source)
    expect_error(DegenerateParameterError, convert_w1_to_w2, (1, 1), F(1))
    expect_error(DegenerateParameterError, convert_w2_to_w1, (1, 1), F(1))


@fixture("roundtrip and coincidence")
def _(cfg):
    _, _, w1, w2 = _fixture_11(cfg)
    expect(is_zero(roundtrip_check((1, 1), w1, 1, e21_source=cfg.e21_source)), "branch 1 roundtrip")
    expect(is_zero(roundtrip_check((1, 1), w2, 2, e21_source=cfg.e21_source)), "branch 2 roundtrip")
    expect(coincidence_check((1, 1), w1, e21_source=cfg.e21_source).coincide, "(1,1) coincidence")
    pt = (F(-7, 3), F(11, 5))
    w = on_surface_w(pt, 1, cfg.precision)
    expect(coincidence_check(pt, w, e21_source=cfg.e21_source).coincide, "manufactured w at (-7/3,11/5)")
    expect_error(CuboidError, roundtrip_check, (0, 2), F(0), 1)
    expect_error(CuboidError, coincidence_check, (0, 2), F(0))


# --- command line -------------------------------------------------------------------


def _cli(*argv):
    from .cli import run

    code, out, err = run(list(argv))
    lines = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return code, lines, err


def _cli1(*argv):
    code, lines, err = _cli(*argv)
    if len(lines) != 1:
        raise FixtureFailure(f"{' '.join(argv[:3])}: exit {code}, {err.strip()}")
    return code, lines[0], err


@fixture("cli profile")
def _(cfg):
    code, obj, _ = _cli1("profile", "1", "1", "--e21-source", cfg.e21_source)
    want = {"E10": "1/2", "E01": "-1/2", "E11": "1/2", "E20": "-3/8", "E30": "0", "E02": "-7/8",
            "E03": "3/8", "E12": "-1", "E21_derived": "3/8", "E21_printed": "-7/24", "biquadratic": "0"}
    expect(code == 0 and all(obj[k] == v for k, v in want.items()), f"profile 1 1 -> {obj}")
    expect(obj["E21"] == "3/8", f"profile 1 1 reports E21 {obj['E21']} from {cfg.e21_source}")
    code, _, err = _cli("profile", "0", "0")
    expect(code == 2 and "Q1" in err, "profile 0 0")
    code, obj, _ = _cli1("profile", "0", "2")
    want = {"E10": "1", "E01": "0", "E11": "0", "E02": "-1", "E12": "-1", "E20": "0", "E30": "0", "E03": "0", "E21": "0"}
    expect(code == 0 and all(obj[k] == v for k, v in want.items()), f"profile 0 2 -> {obj}")


@fixture("cli solve")
def _(cfg):
    code, obj, _ = _cli1("solve", "0", "2", "0", "--branch", "1", "--e21-source", cfg.e21_source)
    expect(code == 0 and obj["x"] == ["0", "0", "1"] and obj["d"] == ["-1", "1", "0"], "solve 0 2 0")
    expect(set(obj["factor_residuals"]) == {"0"} and obj["residual_max"] == "0", "solve 0 2 0 residuals")
    code, _, err = _cli("solve", "1", "1", "1", "--branch", "1")
    expect(code == 2 and "w=±1 degenerate" in err, "solve 1 1 1")
    code, obj, _ = _cli1("solve", "1", "1", "--w-from-cubic", "--branch", "1", "--mode", "numeric",
                           "--precision", str(cfg.precision), "--e21-source", cfg.e21_source)
    expect(code == 0 and float(obj["residual_max"]) < 1e-80, f"numeric solve residual {obj['residual_max'][:12]}")


@fixture("cli roundtrip and coincide")
def _(cfg):
    code, obj, _ = _cli1("coincide", "1", "1", "--w-from-cubic", "--mode", "numeric",
                           "--precision", str(cfg.precision), "--e21-source", cfg.e21_source)
    expect(code == 0 and all(abs(float(v)) < 1e-80 for v in obj["dx"] + obj["dd"]), "coincide 1 1")
    code, _, err = _cli("roundtrip", "0", "2", "0", "--branch", "1")
    expect(code == 2 and "conversion denominator zero" in err, "roundtrip 0 2 0")
    code, _, _ = _cli("roundtrip", "1", "1", "1", "--branch", "2")
    expect(code == 2, "roundtrip 1 1 1")


@fixture("cli verify")
def _(cfg):
    code, obj, _ = _cli1("verify", "3/5", "4/5", "0", "4/5", "3/5", "1", "1")
    residuals = list(obj["cuboid_residuals"].values()) + list(obj["factor_residuals"].values())
    expect(code == 0 and set(residuals) == {"0"} and obj["positive"] is False, "3/5 4/5 tuple")
    code, obj, _ = _cli1("verify", "1", "1", "1", "1", "1", "1", "1")
    f = obj["factor_residuals"]
    expect(f["f1"] == "2" and f["f2"] == "3" and obj["positive"] is True, "all ones")
    code, obj, _ = _cli1("verify", "0", "0", "1", "-1", "1", "0", "1")
    residuals = list(obj["cuboid_residuals"].values()) + list(obj["factor_residuals"].values())
    expect(code == 0 and set(residuals) == {"0"} and obj["positive"] is False, "b=0 tuple")
    code, _, _ = _cli("verify", "1", "1", "x", "1", "1", "1", "1")
    expect(code == 1, "malformed input")


@fixture("cli scan")
def _(cfg):
    code, rows, _ = _cli("scan", "--height", "1", "--e21-source", cfg.e21_source)
    row = next(r for r in rows if (r["b"], r["c"]) == ("0", "1"))
    expect(row["D1"] == "-4/27" and {"0", "3", "-3"} <= set(row["rational_w1"]), f"(0,1) {row}")
    expect(row["solved"] and not row["positive"], "(0,1) solved, not positive")
    code, rows, _ = _cli("scan", "--height", "2", "--e21-source", cfg.e21_source)
    row = next(r for r in rows if (r["b"], r["c"]) == ("1", "1"))
    expect(row["rational_w1"] == [], "(1,1) has no rational w1")
    expect(not any("PERFECT CUBOID CANDIDATE" in r["note"] for r in rows), "candidate found")


def run_fixtures(cfg: FixtureConfig = FixtureConfig()) -> list[FixtureResult]:
    results = []
    for name, fn in _REGISTRY:
        try:
            fn(cfg)
        except FixtureFailure as exc:
            results.append(FixtureResult(name, False, str(exc)))
        except Exception as exc:  # an unexpected error is a failure, not a crash
            results.append(FixtureResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(FixtureResult(name, True))
    return results
