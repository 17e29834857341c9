import dataclasses
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from cuboidfactor.branches import (
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
from cuboidfactor.cuboid import CuboidTuple
from cuboidfactor.errors import (
    AdmissibilityError,
    BranchUndefinedError,
    ConversionSingularError,
    CuboidError,
    DegenerateParameterError,
    OffSurfaceError,
    PairingError,
)
from cuboidfactor.parametrization import ParamPoint
from cuboidfactor.scalars import Numeric, real_context
from oracles import exact_pairing_11

F = Fraction
P = 128
CTX = real_context(P)
S7 = CTX.sqrt(7)
TAU = Numeric(P).tolerance
X11 = ((1 + S7) / 4, (1 - S7) / 4, CTX.mpf(0))
D11 = ((1 - S7) / 4, (1 + S7) / 4, CTX.mpf(-1))


def close(a, b, tol=TAU):
    return all(abs(u - v) < tol for u, v in zip(a, b, strict=True))


def test_b0_fixture_exact():
    sol = solve_branch1((0, 2), F(0))
    assert sol.tuple == CuboidTuple(0, 0, 1, -1, 1, 0, 1)
    assert sol.mode == "exact"
    assert sol.diagnostics.factor_residuals == (0,) * 8
    assert sol.diagnostics.residual_max == 0
    assert sol.pairing_ambiguous


@given(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50)).filter(bool))
def test_b0_family(c):
    sol = solve_branch1((0, c), F(0))
    assert sol.tuple.x == (0, 0, 1)
    assert sorted(sol.tuple.d) == [-1, 0, 1]
    assert all(v == 0 for v in sol.diagnostics.factor_residuals)
    with pytest.raises(AdmissibilityError):
        solve_branch2((0, c), F(0))


def test_11_branch1_numeric():
    sol = solve_branch1((1, 1), -3 * S7)
    assert close(sol.tuple.x, X11)
    assert close(sol.tuple.d, D11)
    assert sol.mode == "numeric(128)"
    diag = sol.diagnostics
    assert diag.residual_max < TAU
    assert abs(diag.e21_reference - CTX.mpf(3) / 8) < TAU
    assert diag.e21_mismatch is True
    with pytest.raises(DegenerateParameterError):
        solve_branch1((1, 1), F(1))


def test_11_pairing_against_radicals():
    x, hits = exact_pairing_11()
    assert len(hits) == 1
    d, e21 = hits[0]
    assert e21 == sp.Rational(3, 8)
    assert [sp.simplify(v - w) for v, w in zip(d, ((1 - sp.sqrt(7)) / 4, (1 + sp.sqrt(7)) / 4, -1))] == [0, 0, 0]
    p = derive_pairing(X11, sorted(D11), F(1, 2), -1)
    assert close(p.alignment, D11) and not p.ambiguous
    assert abs(p.e21 - CTX.mpf(3) / 8) < TAU


def test_pairing_b0_and_inconsistent():
    p = derive_pairing((0, 0, 1), (-1, 0, 1), 0, -1)
    assert p.alignment == (-1, 1, 0) and p.e21 == 0 and p.ambiguous
    assert set(p.matches) == {(-1, 1, 0), (1, -1, 0)}
    with pytest.raises(PairingError, match="profile inconsistent"):
        derive_pairing(X11, sorted(D11), F(3, 2), -1)


def test_11_branch2_numeric():
    sol = solve_branch2((1, 1), 3 * S7 / 5)
    assert close(sorted(sol.tuple.d), sorted(D11))
    assert close(sol.tuple.x, X11)
    assert sol.diagnostics.residual_max < TAU
    with pytest.raises(DegenerateParameterError):
        solve_branch2((1, 1), F(-1))
    with pytest.raises(OffSurfaceError):
        solve_branch2((1, 1), 3 * S7 / 5 + CTX.mpf(10) ** -60)


def test_conversions_11():
    w2 = convert_w1_to_w2((1, 1), -3 * S7)
    assert abs(w2 - 3 * S7 / 5) < TAU
    assert abs(convert_w2_to_w1((1, 1), w2) + 3 * S7) < TAU
    assert roundtrip_check((1, 1), -3 * S7, 1) < TAU
    assert roundtrip_check((1, 1), 3 * S7 / 5, 2) < TAU
    report = coincidence_check((1, 1), -3 * S7)
    assert report.coincide and report.max_difference < TAU


def test_b0_conversion_singular():
    with pytest.raises(ConversionSingularError, match="conversion denominator zero"):
        convert_w1_to_w2((0, 3), F(0))
    with pytest.raises(CuboidError):
        roundtrip_check((0, 3), F(0), 1)
    with pytest.raises(CuboidError):
        coincidence_check((0, 3), F(0))
    for fn in (convert_w1_to_w2, convert_w2_to_w1):
        with pytest.raises(DegenerateParameterError):
            fn((1, 1), F(1))


HALF = (F(1, 2), F(1, 2))
HALF_W1 = [F(v) for v in ("-21", "-6/5", "-9/11", "9/11", "6/5", "21")]
HALF_W2 = [F(v) for v in ("-27/7", "-12/5", "-3/17", "3/17", "12/5", "27/7")]


@pytest.mark.parametrize("w1", HALF_W1)
def test_exact_rational_point_branch1(w1):
    # (1/2, 1/2) has six rational w1; every one gives an exact solution
    report = coincidence_check(HALF, w1)
    assert report.coincide
    assert report.first.diagnostics.residual_max == 0
    assert report.second.diagnostics.residual_max == 0
    assert roundtrip_check(HALF, w1, 1) == 0
    assert sorted(map(abs, report.first.tuple.x)) == [0, F(3, 5), F(4, 5)]


@pytest.mark.parametrize("w2", HALF_W2)
def test_exact_rational_point_branch2(w2):
    sol = solve_branch2(HALF, w2)
    assert sol.diagnostics.residual_max == 0
    assert roundtrip_check(HALF, w2, 2) == 0
    assert convert_w1_to_w2(HALF, convert_w2_to_w1(HALF, w2)) == w2


def test_w_conversion_is_a_bijection_of_rational_roots():
    assert sorted(convert_w1_to_w2(HALF, w) for w in HALF_W1) == HALF_W2


def test_diagnostics_follow_the_tuple():
    sol = solve_branch1(HALF, F(21))
    assert sol.diagnostics.residual_max == 0
    bumped = dataclasses.replace(sol, tuple=CuboidTuple(*sol.tuple.x, *sol.tuple.d[:2], sol.tuple.d3 + 1, 1))
    assert bumped.diagnostics.residual_max > 0


def test_closed_form_e21_sources():
    w1 = -3 * S7
    sol = solve_branch1((1, 1), w1, e21_source="corrected")
    assert sol.diagnostics.residual_max < TAU
    bad = solve_branch1((1, 1), w1, e21_source="printed-q4variant")
    assert max(abs(v) for v in bad.diagnostics.factor_residuals) > 1e-3
    with pytest.raises(BranchUndefinedError, match="branch undefined"):
        solve_branch1((0, 2), F(0), e21_source="printed-verbatim")
    with pytest.raises(ValueError):
        solve_branch1((1, 1), w1, e21_source="nonsense")


def test_profile_e21_provenance():
    assert profile_e21((1, 1)) == (F(3, 8), "pairing-numeric")
    assert profile_e21((0, 2)) == (0, "pairing-exact")
    assert profile_e21(HALF) == (F(-12, 25), "pairing-exact")


def test_on_surface_w_exact_needs_rational_roots():
    assert on_surface_w(HALF, 1) in HALF_W1
    with pytest.raises(BranchUndefinedError):
        on_surface_w((1, 1), 1)


q20 = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 20))


@settings(max_examples=25)
@given(q20, q20)
def test_random_points_numeric(b, c):
    pt = ParamPoint(b, c)
    try:
        w1 = on_surface_w(pt, 1, P)
        w2 = on_surface_w(pt, 2, P)
        report = coincidence_check(pt, w1)
        r1 = roundtrip_check(pt, w1, 1)
        r2 = roundtrip_check(pt, w2, 2)
    except (AdmissibilityError, BranchUndefinedError, ConversionSingularError, DegenerateParameterError) as exc:
        # precondition failures at this point; anything else is a bug
        assert "surface" not in str(exc)
        return
    except CuboidError as exc:
        if "singular point" in str(exc):
            return
        raise
    assert report.max_difference < 1e-80
    assert r1 < 1e-80 and r2 < 1e-80
    assert report.first.diagnostics.residual_max < 1e-80


def test_thread_safety():
    pts = [(F(1, 2), F(1, 2)), (1, 1), (3, F(1, 4)), (F(-7, 3), F(11, 5))] * 3

    def work(pt):
        w = on_surface_w(pt, 1, P if pt != HALF else None)
        return coincidence_check(pt, w).first.tuple

    serial = [work(pt) for pt in pts]
    with ThreadPoolExecutor(max_workers=6) as pool:
        parallel = list(pool.map(work, pts))
    assert serial == parallel
