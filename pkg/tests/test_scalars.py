import threading
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cuboidfactor.scalars import (
    EXACT,
    Numeric,
    domain_of,
    format_scalar,
    height,
    is_zero,
    parse_rational,
    real_context,
    tolerance_for,
    unify,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_scalar(q)) == q


def test_canonical_form():
    assert format_scalar(Fraction(2, 4)) == "1/2"
    assert format_scalar(Fraction(0)) == "0"
    assert format_scalar(Fraction(-6, 3)) == "-2"
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)


@pytest.mark.parametrize("bad", ["x", "1/0", "", "1//2"])
def test_malformed(bad):
    with pytest.raises(ValueError, match="malformed rational"):
        parse_rational(bad)


def test_tolerance_is_derived_from_precision():
    assert tolerance_for(128) == real_context(128).mpf(10) ** -108
    assert Numeric(64).tolerance == real_context(64).mpf(10) ** -44


def test_numeric_zero_test_is_relative():
    ctx = real_context(128)
    tiny = ctx.mpf(10) ** -110
    assert is_zero(tiny)
    assert not is_zero(ctx.mpf(10) ** -100)
    assert is_zero(ctx.mpf(10) ** -100, scale=10**10)
    assert is_zero(Fraction(0)) and not is_zero(Fraction(1, 10**50))


def test_domains_and_lifting():
    ctx = real_context(96)
    v = ctx.mpf(1) / 3
    assert domain_of(Fraction(1), 2) is EXACT
    assert domain_of(Fraction(1), v) == Numeric(96)
    a, b = unify(Fraction(1, 3), v)
    assert a == b
    with pytest.raises(ValueError, match="mixed precisions"):
        domain_of(v, real_context(128).mpf(1))
    with pytest.raises(TypeError):
        EXACT.lift(v)


def test_contexts_are_isolated_and_shared():
    assert real_context(100) is real_context(100)
    assert real_context(100).dps == 100 and real_context(80).dps == 80
    with pytest.raises(ValueError):
        real_context(10)


def test_contexts_thread_safe():
    results = []

    def work(p):
        ctx = real_context(p)
        results.append((p, ctx.dps, len(ctx.nstr(ctx.sqrt(2), p))))

    threads = [threading.Thread(target=work, args=(p,)) for p in (64, 70, 90, 128) * 4]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(p == dps for p, dps, _ in results)


def test_height():
    assert height(Fraction(-7, 3)) == 7
    assert height(Fraction(2, 9)) == 9
    assert height(0) == 1
