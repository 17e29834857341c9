"""The two-parameter family of E-profiles and the derived D-parameters.

All formulas are exact rational functions of ``(b, c)`` with the space
diagonal fixed at ``L = 1``.  Every denominator is a product of the named
factors below; :func:`singularities` reports which of them vanish.

E21 is special: the printed expression disagrees with the value forced by
the rest of the profile.  It is available in three readings:

* ``"printed-verbatim"``   the expression as printed (extra ``-4c^3`` in the
  denominator);
* ``"printed-q4variant"``  the same numerator over the common denominator;
* ``"corrected"``          ``-4c^3`` moved into the numerator, which agrees
  with the value derived from the root pairing (see
  :func:`cuboidfactor.branches.derive_pairing`).

:func:`e_full` uses the verbatim reading unless told otherwise; branch
construction never trusts it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .cubic import CubicCoeffs
from .cuboid import EProfile
from .errors import SingularityError


class ParamPoint(NamedTuple):
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, b, c) -> "ParamPoint":
        return cls(Fraction(b), Fraction(c))

    def __str__(self):
        return f"({self.b}, {self.c})"


# --- denominator factors ----------------------------------------------------


def q1(b, c):
    return b**2 * c**2 + 2 * b**2 - 3 * b**2 * c + c - b * c**2 + 2 * b


def q2(b, c):
    return b * c - 1 - b


def q3(b, c):
    return b * c - c - 2 * b


def q4(b, c):
    return b**2 * c**4 - 6 * b**2 * c**3 + 13 * b**2 * c**2 - 12 * b**2 * c + 4 * b**2 + c**2


def q5(b, c):
    return (
        2 * c**2 + 2 * b**4 * c**4 - 12 * b**4 * c**3 + 26 * b**4 * c**2 - 24 * b**4 * c
        + 8 * b**4 - 6 * b**3 * c**4 + 18 * b**3 * c**3 - 36 * b**3 * c + 24 * b**3
        + 3 * b**2 * c**4 + 8 * b**2 * c**3 - 36 * b**2 * c**2 + 16 * b**2 * c
        + 12 * b**2 - 6 * b * c**3 + 12 * b * c
    )


def q6(b, c):
    return (
        6 * b**4 * c**4 - 36 * b**4 * c**3 + 78 * b**4 * c**2 - 72 * b**4 * c
        + 24 * b**4 - 12 * b**3 * c**4 + 36 * b**3 * c**3 - 72 * b**3 * c
        + 48 * b**3 + 5 * b**2 * c**4 + 16 * b**2 * c**3 - 68 * b**2 * c**2
        + 32 * b**2 * c + 20 * b**2 - 12 * b * c**3 + 24 * b * c + 6 * c**2
    )


FACTORS = {"Q1": q1, "Q2": q2, "Q3": q3, "Q4": q4, "Q5": q5, "Q6": q6}


def singularities(pt: ParamPoint, names=tuple(FACTORS)) -> tuple[str, ...]:
    """Names of the denominator factors (among ``names``) vanishing at ``pt``."""
    b, c = pt
    return tuple(n for n in names if FACTORS[n](b, c) == 0)


def _require(pt, names, where):
    bad = singularities(pt, names)
    if bad:
        raise SingularityError(bad, where)


# --- E-profile --------------------------------------------------------------


def e_linear(pt: ParamPoint) -> tuple[Fraction, Fraction, Fraction]:
    """``(E10, E01, E11)`` on the biquadratic with ``L = 1``."""
    pt = ParamPoint.of(*pt)
    _require(pt, ("Q1",), "e_linear")
    b, c = pt
    den = q1(b, c)
    E11 = -b * (c**2 + 2 - 4 * c) / den
    E10 = -(b**2 * c**2 + 2 * b**2 - 3 * b**2 * c - c) / den
    E01 = -b * (c**2 + 2 - 2 * c) / den
    return E10, E01, E11


def biquadratic_residual(E10, E01, E11, L=1):
    return (2 * E11) ** 2 + (E01**2 + L**2 - E10**2) ** 2 - 8 * E01**2 * L**2


def _e12_numerator(b, c):
    return (
        16 * b**6 + 32 * b**5 - 6 * c**5 * b**2 + 2 * c**5 * b - 62 * b**5 * c**6
        + 62 * b**6 * c**6 + 16 * b**4 - 180 * b**6 * c**5 - c**7 * b**3
        + 18 * b**5 * c**7 - 12 * b**6 * c**7 - 2 * b**5 * c**8 + b**6 * c**8
        + 248 * b**5 * c**2 + 248 * b**6 * c**2 - 96 * b**6 * c + 321 * b**6 * c**4
        - 180 * b**5 * c**3 - 144 * b**5 * c - 360 * b**6 * c**3 + b**4 * c**8
        + 8 * b**4 * c**6 - 6 * b**4 * c**7 + 18 * b**4 * c**5 + 7 * b**3 * c**6
        + 90 * b**5 * c**5 - 14 * b**3 * c**5 + 17 * b**2 * c**4 + 32 * b**4 * c**2
        + 28 * b**3 * c**3 - 28 * b**3 * c**2 - 4 * b * c**3 + 8 * b**3 * c
        - 57 * b**4 * c**4 + 36 * b**4 * c**3 - 12 * b**2 * c**3 - 48 * b**4 * c
        - c**4
    )


def _e21_numerator(b, c):
    return (
        5 * c**6 * b - 2 * c**6 * b**2 + 52 * c**5 * b**2 - 16 * c**5 * b
        - 2 * c**7 * b**2 + 2 * b**4 * c**8 - 26 * b**4 * c**7 - 426 * b**4 * c**5
        - 61 * b**3 * c**6 + 100 * b**3 * c**5 + 14 * c**7 * b**3 - c**8 * b**3
        - 20 * b * c**2 - 8 * b**2 * c**2 - 16 * b**2 * c - 128 * b**2 * c**4
        - 200 * b**3 * c**3 + 244 * b**3 * c**2 + 32 * b * c**3 + 768 * b**4 * c**4
        - 852 * b**4 * c**3 + 568 * b**4 * c**2 + 104 * b**2 * c**3 - 208 * b**4 * c
        + 8 * c**4 + 16 * b**3 - 112 * b**3 * c + 142 * b**4 * c**6 + 32 * b**4
        - 2 * c**5
    )


E21_SOURCES = ("printed-verbatim", "printed-q4variant", "corrected")


def e21_closed_form(pt: ParamPoint, variant: str = "printed-verbatim") -> Fraction:
    """E21 from one of the closed-form readings (see module docstring)."""
    pt = ParamPoint.of(*pt)
    b, c = pt
    tail = q2(b, c) ** 2 * q3(b, c) ** 2
    num = _e21_numerator(b, c)
    if variant == "printed-verbatim":
        _require(pt, ("Q2", "Q3"), "E21")
        first = q4(b, c) - 4 * c**3
        if first == 0:
            raise SingularityError(("Q4-4c^3",), "E21 (printed)")
    elif variant == "printed-q4variant":
        _require(pt, ("Q2", "Q3", "Q4"), "E21")
        first = q4(b, c)
    elif variant == "corrected":
        _require(pt, ("Q2", "Q3", "Q4"), "E21")
        first = q4(b, c)
        num = num - 4 * c**3
    else:
        raise ValueError(f"unknown E21 variant {variant!r}")
    return b / 2 * num / (first * tail)


def e_full(pt: ParamPoint, e21_variant: str = "printed-verbatim") -> EProfile:
    """The nine E-values at ``pt`` with ``L = 1``.

    ``e21_variant`` selects the closed-form reading used for E21.
    """
    pt = ParamPoint.of(*pt)
    _require(pt, ("Q1", "Q2", "Q3", "Q4"), "e_full")
    b, c = pt
    E10, E01, E11 = e_linear(pt)
    Q4 = q4(b, c)
    tail = q2(b, c) ** 2 * q3(b, c) ** 2
    E12 = _e12_numerator(b, c) / (Q4 * tail)
    E03 = (
        b / 2
        * (b**2 * c**4 - 5 * b**2 * c**3 + 10 * b**2 * c**2 - 10 * b**2 * c + 4 * b**2
           + 2 * b * c + 2 * c**2 - b * c**3)
        * (2 * b**2 * c**4 - 12 * b**2 * c**3 + 26 * b**2 * c**2 - 24 * b**2 * c
           + 8 * b**2 - c**4 * b + 3 * b * c**3 - 6 * b * c + 4 * b + c**3 - 2 * c**2
           + 2 * c)
        / (Q4 * tail)
    )
    E30 = (
        c * b**2 * (1 - c) * (c - 2) * (b * c**2 - 4 * b * c + 2 + 4 * b)
        * (2 * b * c**2 - c**2 - 4 * b * c + 2 * b)
        / (Q4 * tail)
    )
    E02 = (
        Fraction(1, 2)
        * (28 * b**2 * c**2 - 16 * b**2 * c - 2 * c**2 - 4 * b**2 - b**2 * c**4
           + 4 * b**3 * c**4 - 12 * b**3 * c**3 + 4 * b * c**3 + 24 * b**3 * c
           - 8 * b * c - 2 * b**4 * c**4 + 12 * b**4 * c**3 - 26 * b**4 * c**2
           - 8 * b**2 * c**3 + 24 * b**4 * c - 16 * b**3 - 8 * b**4)
        / tail
    )
    E20 = (
        b / 2
        * (b * c**2 - 2 * c - 2 * b)
        * (2 * b * c**2 - c**2 - 6 * b * c + 2 + 4 * b)
        / tail
    )
    E21 = e21_closed_form(pt, e21_variant)
    return EProfile(
        E10=E10, E20=E20, E30=E30, E01=E01, E02=E02, E03=E03,
        E21=E21, E11=E11, E12=E12, L=Fraction(1),
    )


# --- D-parameters -----------------------------------------------------------


def _d1_numerator(b, c):
    return (
        7812 * b**4 * c**4 - 216 * b**2 * c**4 - 52 * b**2 * c**3 + 1764 * b**3 * c**4
        - 1200 * b**4 * c**3 - 1848 * b**4 * c**2 + 720 * b**4 * c - 36 * c**4 * b
        - 1512 * b**3 * c**3 - 36 * c**8 * b**3 + 288 * b**3 * c**2 - 108 * c**6 * b**2
        + 380 * c**5 * b**2 + 378 * c**7 * b**3 - 231 * c**8 * b**4 - 300 * c**7 * b**4
        + 3906 * c**6 * b**4 - 13 * c**7 * b**2 - 8904 * c**5 * b**4 - 882 * c**6 * b**3
        + 18 * c**6 * b - 1319 * b**6 * c**8 + 20952 * b**5 * c**3 - 11952 * b**5 * c**2
        + 2592 * b**5 * c - 48372 * b**6 * c**4 + 31620 * b**6 * c**3
        - 10552 * b**6 * c**2 + 816 * b**6 * c + 1494 * b**5 * c**8 - 5238 * b**5 * c**7
        - 4 * c**5 + 7905 * b**6 * c**7 - 24186 * b**6 * c**6 + 288 * b**6
        + 43740 * b**6 * c**5 + 7686 * b**5 * c**6 + 576 * b**7 + 128 * b**8
        - 15372 * b**5 * c**4 - 1080 * b**7 * c**8 - 3546 * b**7 * c**6 + 51 * c**9 * b**6
        + 400 * b**8 * c**8 - 162 * c**9 * b**5 + 8640 * b**7 * c**2 - 3456 * b**7 * c
        + 2808 * b**7 * c**7 - 1560 * b**8 * c**7 + 3940 * b**8 * c**6 + 216 * c**9 * b**7
        - 960 * b**8 * c - 6240 * b**8 * c**3 + 9 * c**10 * b**6 + 7880 * b**8 * c**4
        + 4 * c**10 * b**8 - 6732 * b**8 * c**5 + 45 * c**9 * b**4 + 3200 * b**8 * c**2
        - 11232 * b**7 * c**3 + 7092 * b**7 * c**4 - 18 * c**10 * b**7 - 60 * c**9 * b**8
    )


def _d2_numerator(b, c):
    return (
        832 * b**2 * c**2 - 1440 * b**2 * c**4 - 840 * b**2 * c**3 + 4788 * b**3 * c**4
        + 396 * b * c**3 + 720 * b**3 * c + 808 * b**4 * c**4 + 3032 * b**4 * c**3
        - 2576 * b**4 * c**2 - 96 * b**4 * c + 448 * b**4 - 504 * c**4 * b
        - 4176 * b**3 * c**3 - 9 * c**8 * b**3 + 72 * b**3 * c**2 - 720 * c**6 * b**2
        + 2288 * c**5 * b**2 + 1044 * c**7 * b**3 - 322 * c**8 * b**4 + 758 * c**7 * b**4
        + 404 * c**6 * b**4 - 210 * c**7 * b**2 - 2464 * c**5 * b**4 - 2394 * c**6 * b**3
        + 72 * c**4 + 252 * c**6 * b + 3168 * b**6 * c**8 + 441 * c**9 * b**5
        - 7056 * b**5 * c + 57960 * b**6 * c**4 - 47232 * b**6 * c**3
        + 25344 * b**6 * c**2 - 8064 * b**6 * c - 1809 * b**5 * c**8 + 14472 * b**5 * c**2
        + 3951 * b**5 * c**7 - 72 * c**5 + 36 * c**6 - 11808 * b**6 * c**7 + 1440 * b**5
        + 28980 * b**6 * c**6 - 49032 * b**6 * c**5 - 4410 * b**5 * c**6
        + 8820 * b**5 * c**4 - 15804 * b**5 * c**3 + 1152 * b**6 - 504 * c**9 * b**6
        - 45 * c**9 * b**3 - 6 * c**9 * b**4 + 104 * c**8 * b**2 + 36 * c**10 * b**6
        + 14 * c**10 * b**4 - 45 * c**10 * b**5 - 99 * c**7 * b
    )


def _q4_negative_exponent(b, c):
    # the last factor of D1 as printed, with c^-3 in the second term
    return b**2 * c**4 - 6 * b**2 / c**3 + 13 * b**2 * c**2 - 12 * b**2 * c + 4 * b**2 + c**2


def d1(pt: ParamPoint, exponent: str = "positive") -> Fraction:
    """D-parameter of the edge sextic.

    ``exponent="verbatim"`` reproduces the printed ``c^-3`` in the last
    factor; the default reads it as ``c^3`` (the recurring factor Q4).
    """
    pt = ParamPoint.of(*pt)
    _require(pt, ("Q2", "Q3", "Q4", "Q5"), "D1")
    b, c = pt
    if exponent == "positive":
        last = q4(b, c)
    elif exponent == "verbatim":
        if c == 0:
            raise SingularityError(("c",), "D1 (verbatim c^-3)")
        last = _q4_negative_exponent(b, c)
        if last == 0:
            raise SingularityError(("Q4 (verbatim)",), "D1")
    else:
        raise ValueError(f"unknown exponent reading {exponent!r}")
    return Fraction(-2, 27) * _d1_numerator(b, c) ** 2 / (q5(b, c) ** 3 * last**2)


def d2(pt: ParamPoint) -> Fraction:
    """D-parameter of the face-diagonal sextic."""
    pt = ParamPoint.of(*pt)
    _require(pt, ("Q2", "Q3", "Q4", "Q6"), "D2")
    b, c = pt
    return -2 * b**2 / 27 * _d2_numerator(b, c) ** 2 / (q6(b, c) ** 3 * q4(b, c) ** 2)


def d_parameters(pt: ParamPoint, exponent: str = "positive") -> tuple[Fraction, Fraction]:
    pt = ParamPoint.of(*pt)
    _require(pt, ("Q2", "Q3", "Q4", "Q5", "Q6"), "d_parameters")
    return d1(pt, exponent), d2(pt)


def cubic_coeffs(pt: ParamPoint, branch: int) -> CubicCoeffs:
    """Edge cubic (branch 1) or face-diagonal cubic (branch 2) at ``pt``."""
    # the cubics never involve E21; the q4 reading avoids its stray factor
    E = e_full(pt, e21_variant="printed-q4variant")
    if branch == 1:
        return CubicCoeffs(Fraction(1), -E.E10, E.E20, -E.E30)
    if branch == 2:
        return CubicCoeffs(Fraction(1), -E.E01, E.E02, -E.E03)
    raise ValueError(f"branch must be 1 or 2, got {branch!r}")

