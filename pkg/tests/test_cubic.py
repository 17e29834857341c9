from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cuboidfactor.cubic import (
    PRINTED_PERMUTATIONS,
    CubicCoeffs,
    D_from_roots,
    D_of_w,
    Violation,
    admissibility,
    cleared_sextic,
    cubic_from_roots,
    cubic_roots_from_w,
    deviations,
    reduce_D,
    reduced_roots,
    sextic_residual,
    sextic_roots_from_cubic_roots,
    w_from_roots,
)
from cuboidfactor.cuboid import permute
from cuboidfactor.errors import (
    AdmissibilityError,
    ConversionSingularError,
    DegenerateParameterError,
    OffSurfaceError,
)
from cuboidfactor.polynomials import rational_roots
from cuboidfactor.scalars import real_context
from oracles import symbolic_D_difference

F = Fraction
q30 = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 30))


def _admissible_triple(t):
    return all(u != 0 for u in deviations(*t))


triples = st.tuples(q30, q30, q30).filter(_admissible_triple)


def test_admissibility_examples():
    assert admissibility(CubicCoeffs(1, -7, 14, -8)) is None
    assert admissibility(CubicCoeffs(1, -3, 2, 0)) is Violation.ARITHMETIC_PROGRESSION
    assert admissibility(CubicCoeffs(0, 1, 1, 1)) is Violation.LEADING_ZERO
    assert admissibility(cubic_from_roots(2, 2, 2)) is Violation.TRIPLE_ROOT


@given(q30, q30, q30)
def test_admissible_iff_deviations_nonzero(a, b, c):
    ok = admissibility(cubic_from_roots(a, b, c)) is None
    assert ok == _admissible_triple((a, b, c))


def test_reduce_D_examples():
    assert reduce_D(CubicCoeffs(1, -7, 14, -8)).value == F(-400, 9261)
    assert reduce_D(CubicCoeffs(1, F(-1, 2), F(-3, 8), 0)).value == F(-1922, 35937)
    with pytest.raises(AdmissibilityError):
        reduce_D(CubicCoeffs(1, -3, 2, 0))


def test_D_formulas_agree_symbolically():
    assert symbolic_D_difference() == 0


@given(triples, q30.filter(bool))
def test_reduce_D_matches_roots_and_scaling(t, k):
    A = cubic_from_roots(*t)
    assert reduce_D(A).value == D_from_roots(*t).value
    assert reduce_D(CubicCoeffs(*(k * a for a in A))).value == reduce_D(A).value


def test_D_from_roots_numeric():
    ctx = real_context(128)
    s7 = ctx.sqrt(7)
    tol = ctx.mpf(10) ** -100
    assert D_from_roots(1, 2, 4).value == F(-400, 9261)
    assert abs(D_from_roots(0, (1 + s7) / 4, (1 - s7) / 4).value - ctx.mpf(-1922) / 35937) < tol
    assert abs(D_from_roots(-1, (1 + s7) / 4, (1 - s7) / 4).value - ctx.mpf(-18050) / 328509) < tol


def test_sextic_examples():
    assert sextic_residual(F(-400, 9261), F(3, 5)) == 0
    assert sextic_residual(F(-4, 27), 0) == 0
    assert sextic_residual(F(-400, 9261), 1) == F(-25600, 9261)
    assert rational_roots(cleared_sextic(F(-400, 9261))) == sorted(
        F(v) for v in ("3/5", "-3/5", "3/2", "-3/2", "9", "-9")
    )


def test_reduced_roots_examples():
    assert reduced_roots(F(0)) == (F(-2, 3), F(-2, 3), F(1, 3))
    assert reduced_roots(F(-3, 5)) == (F(-5, 21), F(-20, 21), F(4, 21))
    assert reduced_roots(F(1)) == (-1, 0, 0)


@given(q30)
def test_reduced_roots_solve_reduced_cubic(w):
    D = D_of_w(w)
    assert sextic_residual(D, w) == 0
    for y in reduced_roots(w):
        assert y**3 + y**2 + D == 0


def test_cubic_roots_from_w_examples():
    A = CubicCoeffs(1, -7, 14, -8)
    assert cubic_roots_from_w(A, F(-3, 5)) == (1, 2, 4)
    assert cubic_roots_from_w(A, F(3, 5)) == (2, 1, 4)
    assert cubic_roots_from_w(A, F(3, 2)) == (2, 4, 1)
    with pytest.raises(DegenerateParameterError, match="w=±1 degenerate"):
        cubic_roots_from_w(A, F(1))
    with pytest.raises(OffSurfaceError):
        cubic_roots_from_w(A, F(2))


@given(triples)
def test_sextic_table(t):
    table = sextic_roots_from_cubic_roots(*t)
    A = cubic_from_roots(*t)
    D = reduce_D(A).value
    assert len(set(table.permutations)) == 6 or len(set(t)) < 3
    for w, sigma in table:
        assert sextic_residual(D, w) == 0
        assert cubic_roots_from_w(A, w) == permute(t, sigma)
    assert w_from_roots(*t) == table.roots[0]


def test_printed_permutation_table_is_not_a_bijection():
    table = sextic_roots_from_cubic_roots(1, 2, 4)
    assert table.permutations[:5] == PRINTED_PERMUTATIONS[:5]
    assert table.permutations[5] == (1, 3, 2) != PRINTED_PERMUTATIONS[5]
    assert table.roots == tuple(F(v) for v in ("-3/5", "3/5", "3/2", "-3/2", "-9", "9"))
    with pytest.raises(AdmissibilityError):
        sextic_roots_from_cubic_roots(0, 1, 2)


def test_w_from_roots():
    assert w_from_roots(1, 2, 4) == F(-3, 5)
    assert w_from_roots(F(5, 3), F(5, 3), 7) == 0
    with pytest.raises(ConversionSingularError, match="conversion denominator zero"):
        w_from_roots(0, 2, 1)
    ctx = real_context(128)
    s7 = ctx.sqrt(7)
    w = w_from_roots((1 + s7) / 4, (1 - s7) / 4, 0)
    assert abs(w + 3 * s7) < ctx.mpf(10) ** -120
    table = sextic_roots_from_cubic_roots((1 + s7) / 4, (1 - s7) / 4, 0)
    assert abs(table.roots[0] + 3 * s7) < ctx.mpf(10) ** -120


@given(triples, st.integers(40, 140))
def test_numeric_roundtrip(t, precision):
    ctx = real_context(precision)
    x = tuple(ctx.mpf(v.numerator) / v.denominator for v in t)
    A = cubic_from_roots(*x)
    w = w_from_roots(*x)
    assume(abs(abs(w) - 1) > ctx.mpf(10) ** -10)
    got = cubic_roots_from_w(A, w)
    scale = max(abs(v) for v in x) + 1
    for g, v in zip(got, x):
        assert abs(g - v) <= ctx.mpf(10) ** (25 - precision) * scale**3
