"""Integer polynomials and certified real / rational root finding.

Root isolation runs on the squarefree factors of Yun's decomposition with
Sturm sequences built from integer pseudo-remainders, so every interval
bracket is exact.  Refinement is bisection at dyadic points, evaluated with
integer arithmetic only.

Rational roots are found without factoring any coefficient: if ``p/q`` is a
root of ``f`` with leading coefficient ``a``, then ``q | a`` and ``a*p/q`` is
an integer.  Enclosing each real root to a width below ``1/|a|`` leaves at
most two integers ``k`` with ``k/a`` in the bracket, each checked by exact
evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Sequence

from .errors import IndeterminateError
from .scalars import DEFAULT_PRECISION, real_context


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ``c0 ... cn`` low degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in _trim(self.coefficients))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coeffs: int) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        g = self.content
        if g in (0, 1):
            return self
        return IntPolynomial(tuple(c // g for c in self.coefficients))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def sign_at(self, num: int, den: int = 1) -> int:
        """Sign of ``p(num/den)`` for ``den > 0``, in integer arithmetic."""
        return _eval_sign(self.coefficients, num, den)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _eval_sign(coeffs, num, den) -> int:
    """Sign of p(num/den) with den > 0.

    Horner on the homogenised form den**n * p(num/den).
    """
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return _sign(acc)


def to_integer_polynomial(coeffs: Sequence) -> tuple[IntPolynomial, Fraction]:
    """Clear denominators: returns ``(poly, scale)`` with ``scale * poly == coeffs``.

    ``poly`` has content 1; the zero polynomial comes back with scale 1.
    """
    if not coeffs:
        raise ValueError("coefficient list must be nonempty")
    fracs = [Fraction(c) for c in coeffs]
    common = 1
    for f in fracs:
        common = lcm(common, f.denominator)
    ints = [int(f * common) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return IntPolynomial(()), Fraction(1)
    return IntPolynomial(tuple(v // g for v in ints)), Fraction(g, common)


# ---------------------------------------------------------------------------
# polynomial arithmetic over Q on coefficient lists (low degree first)


def _qdivmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim(Fraction(c) for c in b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = _trim(a)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        t = r[-1] / lead
        q[shift] = t
        for i, c in enumerate(b):
            r[i + shift] -= t * c
        r = _trim(r)
    return _trim(q), r


def _qgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def _qderiv(a):
    return _trim(i * Fraction(c) for i, c in enumerate(a) if i)


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def _as_int_poly(qcoeffs) -> IntPolynomial:
    poly, _ = to_integer_polynomial(qcoeffs or [0])
    return poly


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``[(f_i, i)]`` with ``p ~ prod f_i**i``, f_i squarefree.

    Constant factors are dropped; each ``f_i`` is primitive.
    """
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    a = list(p.coefficients)
    if len(a) == 1:
        return []
    da = _qderiv(a)
    c = _qgcd(a, da)
    w, _ = _qdivmod(a, c)
    y, _ = _qdivmod(da, c)
    z = _qsub(y, _qderiv(w))
    out = []
    i = 1
    while len(w) > 1:
        g = _qgcd(w, z)
        if len(g) > 1:
            out.append((_as_int_poly(g), i))
        w, _ = _qdivmod(w, g)
        y, _ = _qdivmod(z, g)
        z = _qsub(y, _qderiv(w))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm sequences in integer arithmetic


def _neg_prem(a, b):
    """-(positive multiple of the remainder of a by b), made primitive."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    done = 0
    while len(r) - 1 >= db and r:
        t = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= t * c
        r = _trim(r)
        done += 1
    # r = lb**done * a mod b; content is divided out, only the sign survives
    sign = 1 if lb > 0 or done % 2 == 0 else -1
    if not r:
        return []
    g = 0
    for c in r:
        g = gcd(g, c)
    return [-sign * c // g for c in r]


def sturm_sequence(p: IntPolynomial) -> list[tuple[int, ...]]:
    seq = [list(p.coefficients), list(p.derivative().coefficients)]
    while len(seq[-1]) > 1:
        r = _neg_prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(r)
    return [tuple(s) for s in seq if s]


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _variations_at(seq, x: Fraction) -> int:
    return _variations(_eval_sign(s, x.numerator, x.denominator) for s in seq)


@dataclass(frozen=True)
class RootEnclosure:
    """A real root bracketed by exact rationals: ``lo < root <= hi``.

    When ``lo == hi`` the root is exactly that rational.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _root_bound(coeffs) -> Fraction:
    lead = abs(coeffs[-1])
    return 1 + Fraction(max(abs(c) for c in coeffs[:-1]), lead) if len(coeffs) > 1 else Fraction(1)


def _split_point(coeffs, lo, hi):
    # interval endpoints must never be roots, or Sturm counts break
    for k, m in ((1, 2), (1, 3), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5)):
        mid = lo + (hi - lo) * k / m
        if _eval_sign(coeffs, mid.numerator, mid.denominator):
            return mid
    raise AssertionError("degree too high for split candidates")


def _isolate(q: IntPolynomial):
    """Isolating intervals for the distinct real roots of squarefree ``q``."""
    coeffs = q.coefficients
    if len(coeffs) == 2:
        r = Fraction(-coeffs[0], coeffs[1])
        return [(r, r)]
    seq = sturm_sequence(q)
    bound = _root_bound(coeffs)
    pending = [(-bound, bound, _variations_at(seq, -bound), _variations_at(seq, bound))]
    found = []
    while pending:
        lo, hi, vlo, vhi = pending.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = _split_point(coeffs, lo, hi)
        vmid = _variations_at(seq, mid)
        pending.append((lo, mid, vlo, vmid))
        pending.append((mid, hi, vmid, vhi))
    return sorted(found)


def _refine(coeffs, lo: Fraction, hi: Fraction, width: Fraction):
    """Bisect ``(lo, hi]`` around a simple root until narrower than ``width``."""
    if lo == hi:
        return lo, hi
    s_hi = _eval_sign(coeffs, hi.numerator, hi.denominator)
    if s_hi == 0:
        return hi, hi
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = _eval_sign(coeffs, mid.numerator, mid.denominator)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def real_root_enclosures(p: IntPolynomial, width: Fraction) -> list[RootEnclosure]:
    """Bracket every distinct real root of ``p`` to less than ``width``.

    Sorted ascending; multiplicities come from the squarefree decomposition.
    """
    out = []
    for factor, mult in squarefree_decomposition(p):
        for lo, hi in _isolate(factor):
            lo, hi = _refine(factor.coefficients, lo, hi, width)
            out.append(RootEnclosure(lo, hi, mult))
    out.sort(key=lambda e: (e.lo, e.hi))
    return out


def real_roots(p: IntPolynomial, precision: int = DEFAULT_PRECISION) -> list:
    """All real roots of ``p`` as BigReals, ascending, repeated by multiplicity.

    Each root is enclosed to width below ``10**-(precision - 5)`` before it is
    rounded; the returned values live in the context for ``precision``.
    """
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    ctx = real_context(precision)
    width = Fraction(1, 10 ** (precision + 2))
    roots = []
    for enc in real_root_enclosures(p, width):
        mid = (enc.lo + enc.hi) / 2
        value = ctx.mpf(mid.numerator) / mid.denominator
        roots.extend([value] * enc.multiplicity)
    return roots


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """Rational roots of ``p`` with multiplicity, ascending."""
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    roots = []
    for factor, mult in squarefree_decomposition(p):
        coeffs = factor.coefficients
        lead = abs(coeffs[-1])
        width = Fraction(1, 2 * lead)
        for lo, hi in _isolate(factor):
            lo, hi = _refine(coeffs, lo, hi, width)
            if lo == hi:
                roots.extend([lo] * mult)
                continue
            # integers k with lo < k/lead <= hi
            k_lo = floor(lo * lead)
            k_hi = floor(hi * lead)
            for k in range(k_lo, k_hi + 1):
                r = Fraction(k, lead)
                if lo < r <= hi and factor(r) == 0:
                    roots.extend([r] * mult)
    roots.sort()
    return roots
