"""Reduced cubics, the sextic in ``w`` and root recovery.

A cubic ``A3 x^3 + A2 x^2 + A1 x + A0`` with three rational roots is tied to
a rational root ``w`` of

    D (w^2 + 3)^3 + 4 (w - 1)^2 (w + 1)^2 = 0,

where ``D`` is the constant of its reduced form ``y^3 + y^2 + D``.  The
functions here move between coefficients, roots, ``D`` and ``w`` in either
arithmetic mode (see :mod:`cuboidfactor.scalars`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .cuboid import S3, Permutation, permute
from .errors import (
    AdmissibilityError,
    ConversionSingularError,
    DegenerateParameterError,
    OffSurfaceError,
)
from .polynomials import IntPolynomial, to_integer_polynomial
from .scalars import is_zero, unify


class CubicCoeffs(NamedTuple):
    A3: object
    A2: object
    A1: object
    A0: object

    @classmethod
    def of(cls, A3, A2, A1, A0) -> "CubicCoeffs":
        return cls(*unify(A3, A2, A1, A0))

    def __call__(self, x):
        return ((self.A3 * x + self.A2) * x + self.A1) * x + self.A0


class Violation(enum.IntEnum):
    """Which inequality of the admissibility test fails (numbered in order)."""

    LEADING_ZERO = 1
    TRIPLE_ROOT = 2
    ARITHMETIC_PROGRESSION = 3

    def describe(self) -> str:
        return {
            1: "A3 = 0",
            2: "A1/A3 - A2^2/(3 A3^2) = 0 (triple root)",
            3: "A0/A3 - A1 A2/(3 A3^2) + 2 A2^3/(27 A3^3) = 0 "
            "(roots in arithmetic progression)",
        }[int(self)]


@dataclass(frozen=True)
class ReducedCubicD:
    value: object
    source: str  # "coefficients", "roots" or "parametrization"


@dataclass(frozen=True)
class SexticRootTable:
    """The six sextic roots built from a root triple, with their permutations.

    ``permutations[k]`` is the reordering of the input triple that the root
    formulas return when evaluated at ``roots[k]``.
    """

    roots: tuple
    permutations: tuple[Permutation, ...]

    def __iter__(self):
        return iter(zip(self.roots, self.permutations))


# Permutations as printed alongside the six roots.  The last entry repeats the
# identity, so the table cannot exhaust S3; see sextic_roots_from_cubic_roots.
PRINTED_PERMUTATIONS: tuple[Permutation, ...] = (
    (1, 2, 3),
    (2, 1, 3),
    (2, 3, 1),
    (3, 2, 1),
    (3, 1, 2),
    (1, 2, 3),
)


def cubic_from_roots(x1, x2, x3) -> CubicCoeffs:
    """Monic cubic ``(x - x1)(x - x2)(x - x3)`` expanded."""
    x1, x2, x3 = unify(x1, x2, x3)
    return CubicCoeffs(1, -(x1 + x2 + x3), x1 * x2 + x2 * x3 + x3 * x1, -x1 * x2 * x3)


def _invariants(A: CubicCoeffs):
    A3, A2, A1, A0 = A
    flat = A2 * A2 - 3 * A1 * A3
    skew = 2 * A2**3 - 9 * A1 * A2 * A3 + 27 * A0 * A3 * A3
    return flat, skew


def admissibility(A: CubicCoeffs) -> Violation | None:
    """``None`` when the cubic is admissible, else the first failed condition."""
    A3, A2, A1, A0 = A = CubicCoeffs.of(*A)
    scale = max(abs(A3), abs(A2), abs(A1), abs(A0), 1)
    if is_zero(A3, scale):
        return Violation.LEADING_ZERO
    flat, skew = _invariants(A)
    if is_zero(flat, scale**2):
        return Violation.TRIPLE_ROOT
    if is_zero(skew, scale**3):
        return Violation.ARITHMETIC_PROGRESSION
    return None


def _require_admissible(A, where):
    bad = admissibility(A)
    if bad is not None:
        raise AdmissibilityError(bad, where)


def reduce_D(A: CubicCoeffs) -> ReducedCubicD:
    A = CubicCoeffs.of(*A)
    _require_admissible(A, "reduce_D")
    A3, A2, A1, A0 = A
    num = 9 * A1 * A2 * A3 - 27 * A0 * A3 * A3 - 2 * A2**3
    den = 27 * (A2 * A2 - 3 * A1 * A3) ** 3
    return ReducedCubicD(-(num * num) / den, "coefficients")


def deviations(x1, x2, x3) -> tuple:
    """``(2x1 - x2 - x3, 2x2 - x3 - x1, 2x3 - x1 - x2)``; sums to zero."""
    return (2 * x1 - x2 - x3, 2 * x2 - x3 - x1, 2 * x3 - x1 - x2)


def _require_deviations(x1, x2, x3, where):
    x1, x2, x3 = unify(x1, x2, x3)
    u = deviations(x1, x2, x3)
    scale = max(abs(x1), abs(x2), abs(x3), 1)
    if any(is_zero(ui, scale) for ui in u):
        raise AdmissibilityError(Violation.ARITHMETIC_PROGRESSION, where)
    return u


def D_from_roots(x1, x2, x3) -> ReducedCubicD:
    u1, u2, u3 = _require_deviations(x1, x2, x3, "D_from_roots")
    s = u1 * u1 + u2 * u2 + u3 * u3
    return ReducedCubicD(-8 * (u1 * u2 * u3) ** 2 / s**3, "roots")


def sextic_residual(D, w):
    D, w = unify(D, w)
    return D * (w * w + 3) ** 3 + 4 * (w - 1) ** 2 * (1 + w) ** 2


def sextic_scale(D, w):
    """Magnitude of the two sextic terms, used for relative zero tests."""
    return abs(D) * (w * w + 3) ** 3 + 4 * (w - 1) ** 2 * (1 + w) ** 2


def on_sextic(D, w) -> bool:
    return is_zero(sextic_residual(D, w), sextic_scale(D, w))


def sextic_coefficients(D) -> list:
    """Coefficients of the sextic in ``w``, low degree first."""
    (D,) = unify(D)
    return [27 * D + 4, 0, 27 * D - 8, 0, 9 * D + 4, 0, D]


def cleared_sextic(D) -> IntPolynomial:
    """The sextic with denominators cleared, for an exact ``D``."""
    poly, _ = to_integer_polynomial(sextic_coefficients(D))
    return poly


def reduced_roots(w) -> tuple:
    """The three roots of ``y^3 + y^2 + D(w)`` parametrised by ``w``."""
    (w,) = unify(w)
    q = w * w + 3
    return (-2 * (w + 1) / q, 2 * (w - 1) / q, (1 - w * w) / q)


def D_of_w(w):
    """The ``D`` for which ``w`` lies on the sextic."""
    (w,) = unify(w)
    return -4 * (w - 1) ** 2 * (w + 1) ** 2 / (w * w + 3) ** 3


def _require_regular_w(w):
    if is_zero(w - 1, 1) or is_zero(w + 1, 1):
        raise DegenerateParameterError("w=±1 degenerate: root formulas divide by zero")


def cubic_roots_from_w(A: CubicCoeffs, w, *, check_surface: bool = True) -> tuple:
    """Recover the three roots of an admissible cubic from a sextic root ``w``.

    The sextic membership of ``w`` is validated unless ``check_surface`` is
    false (off-surface input silently produces non-roots otherwise).
    """
    *coeffs, w = unify(*A, w)
    A = CubicCoeffs(*coeffs)
    _require_admissible(A, "cubic_roots_from_w")
    _require_regular_w(w)
    if check_surface:
        D = reduce_D(A).value
        if not on_sextic(D, w):
            raise OffSurfaceError("w not on sextic for this cubic")
    A3, A2, A1, A0 = A
    P = 2 * A2**3 - 9 * A1 * A2 * A3 + 27 * A0 * A3 * A3
    Q = 18 * A2 * A1 * A3 - 6 * A2**3
    R = -9 * A1 * A2 * A3 + 81 * A0 * A3 * A3
    common = A3 * (A2 * A2 - 3 * A1 * A3)
    x1 = (P * w * w + Q * w + R) / (18 * common * (1 + w))
    x2 = (P * w * w - Q * w + R) / (18 * common * (1 - w))
    x3 = (
        (A2**3 - 27 * A0 * A3 * A3) * w * w
        + 36 * A1 * A2 * A3
        - 81 * A0 * A3 * A3
        - 9 * A2**3
    ) / (9 * common * (1 - w) * (1 + w))
    return (x1, x2, x3)


def w_from_roots(x1, x2, x3):
    """Sextic root whose root formulas return ``(x1, x2, x3)`` in this order."""
    x1, x2, x3 = unify(x1, x2, x3)
    den = 2 * x3 - x1 - x2
    if is_zero(den, max(abs(x1), abs(x2), abs(x3), 1)):
        raise ConversionSingularError("conversion denominator zero: 2*v3 - v1 - v2 = 0")
    return 3 * (x1 - x2) / den


def _match_permutation(source, image) -> Permutation | None:
    scale = max(max(abs(v) for v in source), 1)
    for sigma in S3:
        if all(is_zero(a - b, scale) for a, b in zip(permute(source, sigma), image)):
            return sigma
    return None


def sextic_roots_from_cubic_roots(x1, x2, x3) -> SexticRootTable:
    """All six sextic roots for the cubic with roots ``x1, x2, x3``.

    Each permutation is found by evaluating the root formulas at that root
    and matching the output against reorderings of the input.  With repeated
    roots several permutations match; the first in S3 order is recorded.
    """
    x1, x2, x3 = unify(x1, x2, x3)
    u1, u2, u3 = _require_deviations(x1, x2, x3, "sextic_roots_from_cubic_roots")
    w1 = (u1 - u2) / u3
    w3 = (u2 - u3) / u1
    w5 = (u3 - u1) / u2
    roots = (w1, -w1, w3, -w3, w5, -w5)
    A = cubic_from_roots(x1, x2, x3)
    perms = []
    for w in roots:
        image = cubic_roots_from_w(A, w, check_surface=False)
        sigma = _match_permutation((x1, x2, x3), image)
        if sigma is None:
            raise ArithmeticError(f"root formulas at w={w} do not permute the input roots")
        perms.append(sigma)
    return SexticRootTable(roots, tuple(perms))
