"""Scalar domains.

Two arithmetic modes are supported throughout the package:

* exact: :class:`fractions.Fraction` (ints are accepted and promoted);
* numeric: ``mpf`` values from a private mpmath context at ``P`` decimal
  digits (the ``BigReal`` of this package).

Each precision gets its own :class:`mpmath.MPContext` which is never
reconfigured after creation, so numeric code never touches the global
``mpmath.mp`` state and is safe to call from several threads.

Zero tests in numeric mode use the tolerance ``10**-(P - 20)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath

Rational = Fraction
DEFAULT_PRECISION = 128
MIN_PRECISION = 24
GUARD_DIGITS = 20

_contexts: dict[int, mpmath.MPContext] = {}
_contexts_lock = threading.Lock()


def real_context(precision: int) -> mpmath.MPContext:
    """Return the shared context for ``precision`` decimal digits."""
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION}")
    with _contexts_lock:
        ctx = _contexts.get(precision)
        if ctx is None:
            ctx = mpmath.MPContext()
            ctx.dps = precision
            _contexts[precision] = ctx
        return ctx


def is_exact(v) -> bool:
    return isinstance(v, _RationalABC)


def is_real(v) -> bool:
    return isinstance(v, mpmath.ctx_mp_python._mpf)


def precision_of(v) -> int | None:
    """Decimal precision carried by ``v``, or None for exact values."""
    if is_exact(v):
        return None
    if is_real(v):
        return v.context.dps
    raise TypeError(f"unsupported scalar type {type(v).__name__}")


def tolerance_for(precision: int):
    ctx = real_context(precision)
    return ctx.mpf(10) ** (GUARD_DIGITS - precision)


@dataclass(frozen=True)
class Exact:
    """Exact rational arithmetic."""

    name = "exact"
    precision = None

    def lift(self, v) -> Fraction:
        if is_real(v):
            raise TypeError("cannot lift a BigReal into exact mode")
        return Fraction(v)

    def is_zero(self, v, scale=1) -> bool:
        return v == 0

    @property
    def label(self) -> str:
        return "exact"


@dataclass(frozen=True)
class Numeric:
    """Real arithmetic at ``precision`` decimal digits."""

    precision: int = DEFAULT_PRECISION
    name = "numeric"

    def __post_init__(self):
        real_context(self.precision)

    @property
    def ctx(self) -> mpmath.MPContext:
        return real_context(self.precision)

    @property
    def tolerance(self):
        return tolerance_for(self.precision)

    def lift(self, v):
        ctx = self.ctx
        if isinstance(v, _RationalABC):
            return ctx.mpf(int(v.numerator)) / int(v.denominator)
        if is_real(v):
            return ctx.mpf(v)
        if isinstance(v, str):
            return ctx.mpf(v)
        if isinstance(v, float):
            return ctx.mpf(v)
        raise TypeError(f"cannot lift {type(v).__name__} to a BigReal")

    def is_zero(self, v, scale=1) -> bool:
        return abs(v) <= self.tolerance * max(abs(scale), 1)

    @property
    def label(self) -> str:
        return f"numeric({self.precision})"


EXACT = Exact()


def domain_of(*values):
    """Infer the arithmetic domain of a group of scalars.

    Mixing exact values with BigReals yields the numeric domain; BigReals
    of different precisions are rejected.
    """
    precisions = {precision_of(v) for v in values} - {None}
    if not precisions:
        return EXACT
    if len(precisions) > 1:
        raise ValueError(f"mixed precisions {sorted(precisions)}")
    return Numeric(precisions.pop())


def unify(*values) -> tuple:
    """Lift scalars into their common domain.

    Fraction and mpf do not mix under ``-``, ``/`` or comparisons, so every
    entry point that may receive both calls this first.
    """
    domain = domain_of(*values)
    return tuple(domain.lift(v) for v in values)


def is_zero(v, scale=1) -> bool:
    """Zero test matched to the arithmetic mode of ``v``.

    ``scale`` is the magnitude of the terms that produced ``v``; numeric
    comparisons are made relative to it (never below absolute tolerance).
    """
    if is_exact(v):
        return v == 0
    if not is_real(v):
        raise TypeError(f"unsupported scalar {v!r}")
    return abs(v) <= tolerance_for(v.context.dps) * max(abs(scale), 1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer or a finite decimal into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_scalar(v, digits: int | None = None) -> str:
    """Canonical text form: ``num/den`` for exact values, decimal otherwise."""
    if is_exact(v):
        v = Fraction(v)
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    ctx = v.context
    n = digits if digits is not None else ctx.dps
    return ctx.nstr(v, n)


def height(q: Fraction) -> int:
    """max(|numerator|, denominator) of a reduced fraction."""
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)
