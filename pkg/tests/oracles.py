"""Independent reference computations used only by the tests.

Nothing here imports the package's algorithms: root finding goes through
divisor enumeration or sympy, reductions through sympy's own algebra.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy as sp


def divisors(n: int) -> list[int]:
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def brute_rational_roots(coeffs: list[int]) -> list[Fraction]:
    """Rational-root-theorem enumeration with multiplicity, low degree first."""
    coeffs = list(coeffs)
    roots = []
    while coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    cands = {Fraction(s * p, q) for p in divisors(coeffs[0]) for q in divisors(coeffs[-1]) for s in (1, -1)}
    x = sp.Symbol("x")
    poly = sp.Poly(list(reversed(coeffs)), x)
    for r in cands:
        m = 0
        p = poly
        lin = sp.Poly(r.denominator * x - r.numerator, x)
        while True:
            q, rem = sp.div(p, lin)
            if not rem.is_zero:
                break
            m += 1
            p = q
        roots.extend([r] * m)
    return sorted(roots)


def sympy_real_root_count(coeffs: list[int]) -> int:
    x = sp.Symbol("x")
    return len(sp.Poly(list(reversed(coeffs)), x).real_roots())


def symbolic_D_difference():
    """Coefficient formula for D minus the root-deviation formula, via Vieta.

    Both are written out here from scratch over generic roots; the result
    simplifies to 0 exactly when the two formulas agree as rational functions.
    """
    x1, x2, x3 = sp.symbols("x1 x2 x3")
    A3, A2, A1, A0 = 1, -(x1 + x2 + x3), x1 * x2 + x2 * x3 + x3 * x1, -x1 * x2 * x3
    num = 9 * A1 * A2 * A3 - 27 * A0 * A3**2 - 2 * A2**3
    from_coeffs = -num**2 / (27 * (A2**2 - 3 * A1 * A3) ** 3)
    u = (2 * x1 - x2 - x3, 2 * x2 - x3 - x1, 2 * x3 - x1 - x2)
    from_roots = -8 * (u[0] * u[1] * u[2]) ** 2 / (u[0] ** 2 + u[1] ** 2 + u[2] ** 2) ** 3
    return sp.simplify(sp.together(from_coeffs - from_roots))


def random_rational(rng: random.Random, h: int, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-h, h), rng.randint(1, h))
        if not (nonzero and v == 0):
            return v


def exact_pairing_11():
    """The (1,1) pairing checked in exact radicals."""
    s7 = sp.sqrt(7)
    x = ((1 + s7) / 4, (1 - s7) / 4, sp.Integer(0))
    dset = (sp.Integer(-1), (1 + s7) / 4, (1 - s7) / 4)
    hits = []
    for d in itertools.permutations(dset):
        e11 = sum(x[i] * d[j] for i in range(3) for j in range(3) if i != j)
        e12 = x[0] * d[1] * d[2] + x[1] * d[2] * d[0] + x[2] * d[0] * d[1]
        if sp.simplify(e11 - sp.Rational(1, 2)) == 0 and sp.simplify(e12 + 1) == 0:
            e21 = sp.simplify(x[0] * x[1] * d[2] + x[1] * x[2] * d[0] + x[2] * x[0] * d[1])
            hits.append((d, e21))
    return x, hits
