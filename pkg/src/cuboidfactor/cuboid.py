"""Cuboid equations, factor equations and elementary multisymmetric sums."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields
from fractions import Fraction

from .scalars import domain_of, is_exact, is_zero

Permutation = tuple[int, int, int]

# image lists of (1, 2, 3); the identity first, then lexicographic
S3: tuple[Permutation, ...] = tuple(itertools.permutations((1, 2, 3)))
IDENTITY: Permutation = (1, 2, 3)


def permute(values, sigma: Permutation) -> tuple:
    """Reindex a triple: component ``i`` of the result is ``values[sigma[i]]``."""
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(f"{sigma!r} is not a permutation of (1, 2, 3)")
    return tuple(values[s - 1] for s in sigma)


@dataclass(frozen=True)
class CuboidTuple:
    """Edges ``x``, face diagonals ``d`` and space diagonal ``L``.

    Components are all exact or all BigReals of one precision.  No sign
    conditions are imposed.
    """

    x1: object
    x2: object
    x3: object
    d1: object
    d2: object
    d3: object
    L: object = Fraction(1)

    def __post_init__(self):
        values = [getattr(self, f.name) for f in fields(self)]
        domain = domain_of(*values)
        for f, v in zip(fields(self), values):
            object.__setattr__(self, f.name, domain.lift(v))

    @classmethod
    def from_parts(cls, x, d, L=1) -> "CuboidTuple":
        return cls(*x, *d, L)

    @property
    def x(self) -> tuple:
        return (self.x1, self.x2, self.x3)

    @property
    def d(self) -> tuple:
        return (self.d1, self.d2, self.d3)

    def components(self) -> tuple:
        return (*self.x, *self.d, self.L)

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.components())


@dataclass(frozen=True)
class ResidualVector:
    p0: object
    p1: object
    p2: object
    p3: object
    factor: tuple  # f1 ... f8

    def all(self) -> tuple:
        return (self.p0, self.p1, self.p2, self.p3, *self.factor)


@dataclass(frozen=True)
class EProfile:
    E10: object
    E20: object
    E30: object
    E01: object
    E02: object
    E03: object
    E21: object
    E11: object
    E12: object
    L: object = Fraction(1)

    NAMES = ("E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11", "E12")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in (*self.NAMES, "L")}


def cuboid_residuals(t: CuboidTuple) -> tuple:
    x1, x2, x3 = t.x
    d1, d2, d3 = t.d
    return (
        x1**2 + x2**2 + x3**2 - t.L**2,
        x2**2 + x3**2 - d1**2,
        x3**2 + x1**2 - d2**2,
        x1**2 + x2**2 - d3**2,
    )


def factor_residuals(t: CuboidTuple) -> tuple:
    """Left-hand sides of the eight factor equations, f1 through f8."""
    p0, *p = cuboid_residuals(t)
    x, d = t.x, t.d
    weights = (
        (1, 1, 1),
        d,
        x,
        tuple(v**2 for v in d),
        tuple(v**2 for v in x),
        tuple(a * b for a, b in zip(x, d)),
        tuple(a**2 * b**2 for a, b in zip(x, d)),
    )
    return (p0, *(sum(w * pi for w, pi in zip(ws, p)) for ws in weights))


def residual_vector(t: CuboidTuple) -> ResidualVector:
    p = cuboid_residuals(t)
    return ResidualVector(*p, factor_residuals(t))


@dataclass(frozen=True)
class ImplicationReport:
    factor_zero: bool
    positive: bool
    cuboid_zero: bool

    @property
    def implication_holds(self) -> bool:
        return not (self.factor_zero and self.positive and not self.cuboid_zero)


def is_positive(t: CuboidTuple) -> bool:
    return all(v > 0 for v in (*t.x, *t.d))


def check_implication(t: CuboidTuple) -> ImplicationReport:
    """Probe: positive factor solutions must solve the cuboid equations."""
    if not t.exact:
        raise ValueError("the implication probe needs an exact tuple")
    return ImplicationReport(
        factor_zero=all(v == 0 for v in factor_residuals(t)),
        positive=is_positive(t),
        cuboid_zero=all(v == 0 for v in cuboid_residuals(t)),
    )


def e_profile(t: CuboidTuple) -> EProfile:
    x1, x2, x3 = t.x
    d1, d2, d3 = t.d
    return EProfile(
        E10=x1 + x2 + x3,
        E20=x1 * x2 + x2 * x3 + x3 * x1,
        E30=x1 * x2 * x3,
        E01=d1 + d2 + d3,
        E02=d1 * d2 + d2 * d3 + d3 * d1,
        E03=d1 * d2 * d3,
        E21=x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2,
        E11=x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1,
        E12=x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2,
        L=t.L,
    )


def apply_permutation(sigma: Permutation, t: CuboidTuple) -> CuboidTuple:
    return CuboidTuple.from_parts(permute(t.x, sigma), permute(t.d, sigma), t.L)


@dataclass(frozen=True)
class SearchReport:
    bound: int
    tuples_examined: int
    factor_solutions: int
    counterexamples: tuple
    perfect_cuboids: tuple = ()

    @property
    def clean(self) -> bool:
        return not self.counterexamples


def search_positive_factor_solutions(bound: int = 20) -> SearchReport:
    """Exhaustive probe over integer tuples with components in ``1..bound``.

    ``f1 = p0`` forces ``L**2 = x1**2 + x2**2 + x3**2``, so only edge triples
    with an integral space diagonal ``L <= bound`` need their ``d`` scanned.
    Factor equations are invariant under simultaneous S3 action, so edges are
    taken sorted; every face-diagonal triple is still visited.
    """
    squares = {k * k: k for k in range(1, bound + 1)}
    examined = 0
    solutions = 0
    bad = []
    perfect = []
    rng = range(1, bound + 1)
    for x1, x2, x3 in itertools.combinations_with_replacement(rng, 3):
        L = squares.get(x1 * x1 + x2 * x2 + x3 * x3)
        if L is None:
            continue
        xs = (x1, x2, x3)
        for d in itertools.product(rng, repeat=3):
            examined += 1
            p = (
                x2 * x2 + x3 * x3 - d[0] * d[0],
                x3 * x3 + x1 * x1 - d[1] * d[1],
                x1 * x1 + x2 * x2 - d[2] * d[2],
            )
            if p == (0, 0, 0):
                solutions += 1
                perfect.append(CuboidTuple.from_parts(xs, d, L))
                continue
            if _factor_tail_zero(xs, d, p):
                solutions += 1
                # p0 = 0 already: factor-zero and positive, yet not a cuboid
                bad.append(CuboidTuple.from_parts(xs, d, L))
    return SearchReport(bound, examined, solutions, tuple(bad), tuple(perfect))


def _factor_tail_zero(x, d, p) -> bool:
    if p[0] + p[1] + p[2]:
        return False
    for w in (
        d,
        x,
        [v * v for v in d],
        [v * v for v in x],
        [a * b for a, b in zip(x, d)],
        [a * a * b * b for a, b in zip(x, d)],
    ):
        if w[0] * p[0] + w[1] * p[1] + w[2] * p[2]:
            return False
    return True


def is_zero_vector(values, scale=1) -> bool:
    return all(is_zero(v, scale) for v in values)
