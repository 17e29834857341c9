"""The two branch constructions, the conversion maps between them, and the
roundtrip / coincidence checks.

Branch 1 recovers the edges from the edge cubic at a sextic root ``w1`` and
then solves a linear system for the face diagonals::

    d1 + d2 + d3                    = E01
    sum_{i != j} x_i d_j            = E11
    x1 x2 d3 + x2 x3 d1 + x3 x1 d2  = E21

Branch 2 does the mirror image: face diagonals from the face-diagonal cubic
at ``w2``, then edges from::

    x1 + x2 + x3                    = E10
    sum_{i != j} x_i d_j            = E11
    x1 d2 d3 + x2 d3 d1 + x3 d1 d2  = E12

The E21 used on branch 1 comes from :func:`derive_pairing`, which aligns the
face-diagonal roots against the edges through E11 and E12.  The printed
closed form is carried along only for comparison.

Both modes work: pass a Fraction ``w`` for exact arithmetic or a BigReal for
numeric work at that value's precision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .cubic import (
    admissibility,
    cubic_roots_from_w,
    on_sextic,
    reduce_D,
    sextic_residual,
    w_from_roots,
)
from .cuboid import (
    CuboidTuple,
    EProfile,
    cuboid_residuals,
    e_profile,
    factor_residuals,
)
from .errors import (
    AdmissibilityError,
    BranchUndefinedError,
    OffSurfaceError,
    PairingError,
    SingularityError,
)
from .polynomials import rational_roots, real_roots, to_integer_polynomial
from .parametrization import ParamPoint, cubic_coeffs, e21_closed_form, e_full
from .scalars import DEFAULT_PRECISION, EXACT, Numeric, domain_of, is_zero

E21_CHOICES = ("derived", "printed-verbatim", "printed-q4variant", "corrected")


# --- root multisets of the two cubics ----------------------------------------


@lru_cache(maxsize=1024)
def _cubic_roots(pt: ParamPoint, branch: int, precision: int | None) -> tuple:
    A = cubic_coeffs(pt, branch)
    poly, _ = to_integer_polynomial([A.A0, A.A1, A.A2, A.A3])
    if precision is None:
        return tuple(rational_roots(poly))
    return tuple(real_roots(poly, precision))


def cubic_root_multiset(pt: ParamPoint, branch: int, domain) -> tuple:
    """Roots of the edge (1) or face-diagonal (2) cubic, ascending.

    Exact mode needs three rational roots, numeric mode three real ones.
    """
    pt = ParamPoint.of(*pt)
    roots = _cubic_roots(pt, branch, domain.precision)
    if len(roots) != 3:
        kind = "rational" if domain.precision is None else "real"
        which = "edge" if branch == 1 else "face-diagonal"
        raise BranchUndefinedError(f"{which} cubic lacks three {kind} roots")
    return roots


def on_surface_w(pt: ParamPoint, branch: int, precision: int | None = None):
    """A sextic root for ``branch`` built from the cubic's own roots.

    The roots are taken ascending and fed to :func:`w_from_roots`, which puts
    the result on the sextic by construction.
    """
    pt = ParamPoint.of(*pt)
    A = cubic_coeffs(pt, branch)
    bad = admissibility(A)
    if bad is not None:
        raise AdmissibilityError(bad, f"branch {branch} cubic")
    domain = EXACT if precision is None else Numeric(precision)
    return w_from_roots(*cubic_root_multiset(pt, branch, domain))


# --- pairing -----------------------------------------------------------------


@dataclass(frozen=True)
class Pairing:
    alignment: tuple
    e21: object
    ambiguous: bool
    matches: tuple


def _mixed_e11(x, d):
    x1, x2, x3 = x
    d1, d2, d3 = d
    return x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1


def _mixed_e12(x, d):
    x1, x2, x3 = x
    d1, d2, d3 = d
    return x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2


def _mixed_e21(x, d):
    x1, x2, x3 = x
    d1, d2, d3 = d
    return x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2


def _close(a, b, scale) -> bool:
    return is_zero(a - b, scale)


def _distinct(candidates, scale):
    out = []
    for cand in candidates:
        if not any(all(_close(u, v, scale) for u, v in zip(cand, prev)) for prev in out):
            out.append(cand)
    return out


def _align(fixed, multiset, E11, E12, fixed_is_x: bool) -> list:
    sx = sum(abs(v) for v in fixed) + 1
    sd = sum(abs(v) for v in multiset) + 1
    hits = []
    for cand in itertools.permutations(multiset):
        x, d = (fixed, cand) if fixed_is_x else (cand, fixed)
        if _close(_mixed_e11(x, d), E11, sx * sd) and _close(
            _mixed_e12(x, d), E12, (sx if fixed_is_x else sd) * sd * (sd if fixed_is_x else sx)
        ):
            hits.append(tuple(cand))
    hits.sort()
    return _distinct(hits, sd if fixed_is_x else sx)


def derive_pairing(x, d_multiset, E11, E12) -> Pairing:
    """Order the face-diagonal roots against the edge order ``x``.

    Keeps the alignments reproducing both E11 and E12, in lexicographic
    order; E21 is then read off the first one.  Several distinct survivors
    are reported as ambiguous rather than rejected.
    """
    x, d_multiset = tuple(x), tuple(d_multiset)
    *vals, E11, E12 = _lift_all(*x, *d_multiset, E11, E12)
    x, d_multiset = tuple(vals[:3]), tuple(vals[3:])
    hits = _align(x, d_multiset, E11, E12, fixed_is_x=True)
    if not hits:
        raise PairingError("profile inconsistent: no alignment reproduces E11 and E12")
    return Pairing(hits[0], _mixed_e21(x, hits[0]), len(hits) > 1, tuple(hits))


def derive_edge_pairing(d, x_multiset, E11, E12) -> Pairing:
    """Mirror of :func:`derive_pairing`: order the edge roots against ``d``."""
    d, x_multiset = tuple(d), tuple(x_multiset)
    *vals, E11, E12 = _lift_all(*d, *x_multiset, E11, E12)
    d, x_multiset = tuple(vals[:3]), tuple(vals[3:])
    hits = _align(d, x_multiset, E11, E12, fixed_is_x=False)
    if not hits:
        raise PairingError("profile inconsistent: no alignment reproduces E11 and E12")
    return Pairing(hits[0], _mixed_e21(hits[0], d), len(hits) > 1, tuple(hits))


def _lift_all(*values):
    domain = domain_of(*values)
    return [domain.lift(v) for v in values]


def profile_e21(pt: ParamPoint, precision: int = DEFAULT_PRECISION) -> tuple:
    """Exact consistency-derived E21 for a parameter point, and its provenance.

    When both cubics split over Q the pairing is done exactly.  Otherwise
    the pairing runs on real roots at ``precision`` and must agree with the
    corrected closed form; the exact value reported is then that closed form.
    Provenance is one of ``"pairing-exact"``, ``"pairing-numeric"``,
    ``"closed-form"`` (no real pairing possible) or ``"mismatch"``.
    """
    pt = ParamPoint.of(*pt)
    E = e_full(pt, "printed-q4variant")
    closed = e21_closed_form(pt, "corrected")
    try:
        x = cubic_root_multiset(pt, 1, EXACT)
        d = cubic_root_multiset(pt, 2, EXACT)
        found = derive_pairing(x, d, E.E11, E.E12).e21
        return found, "pairing-exact" if found == closed else "mismatch"
    except (BranchUndefinedError, PairingError):
        pass
    domain = Numeric(precision)
    try:
        x = cubic_root_multiset(pt, 1, domain)
        d = cubic_root_multiset(pt, 2, domain)
        found = derive_pairing(x, d, E.E11, E.E12).e21
    except (BranchUndefinedError, PairingError):
        return closed, "closed-form"
    ok = is_zero(found - domain.lift(closed), abs(found) + 1)
    return closed, "pairing-numeric" if ok else "mismatch"


# --- linear systems ----------------------------------------------------------


class _Singular(Exception):
    pass


def _solve3(M, rhs):
    """Gaussian elimination with partial pivoting; works on Fractions and mpf."""
    rows = [list(r) + [v] for r, v in zip(M, rhs)]
    # row 1-norm products bound |det|, like Hadamard but without square roots
    bound = 1
    for r in M:
        bound *= max(sum(abs(v) for v in r), 1)
    det = 1
    for col in range(3):
        piv = max(range(col, 3), key=lambda i: abs(rows[i][col]))
        if rows[piv][col] == 0:
            raise _Singular
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for i in range(col + 1, 3):
            f = rows[i][col] / p
            for j in range(col, 4):
                rows[i][j] -= f * rows[col][j]
    if is_zero(det, bound):
        raise _Singular
    sol = [0, 0, 0]
    for i in (2, 1, 0):
        acc = rows[i][3] - sum(rows[i][j] * sol[j] for j in range(i + 1, 3))
        sol[i] = acc / rows[i][i]
    return tuple(sol)


# --- solutions ---------------------------------------------------------------


@dataclass(frozen=True)
class Diagnostics:
    factor_residuals: tuple
    cuboid_residuals: tuple
    profile_residuals: dict
    sextic_residual: object
    e21_printed: object
    e21_reference: object

    @property
    def residual_max(self):
        vals = [abs(v) for v in self.factor_residuals]
        vals += [abs(v) for v in self.profile_residuals.values()]
        vals.append(abs(self.sextic_residual))
        return max(vals)

    @property
    def e21_mismatch(self) -> bool | None:
        if self.e21_printed is None:
            return None
        return not is_zero(self.e21_printed - self.e21_reference, abs(self.e21_reference) + 1)


@dataclass(frozen=True)
class BranchSolution:
    pt: ParamPoint
    branch: int
    w: object
    tuple: CuboidTuple
    mode: str
    e21_reference: object
    e21_source: str = "derived"
    pairing_ambiguous: bool = False
    notes: tuple = field(default=())

    @property
    def diagnostics(self) -> Diagnostics:
        """Residuals recomputed from the final tuple on every access."""
        t = self.tuple
        domain = domain_of(*t.components())
        ref = replace(e_full(self.pt, "printed-q4variant"), E21=self.e21_reference)
        got = e_profile(t)
        profile = {
            name: getattr(got, name) - domain.lift(getattr(ref, name)) for name in EProfile.NAMES
        }
        A = cubic_coeffs(self.pt, self.branch)
        D = domain.lift(reduce_D(A).value)
        try:
            printed = domain.lift(e21_closed_form(self.pt, "printed-verbatim"))
        except SingularityError:
            printed = None
        return Diagnostics(
            factor_residuals=factor_residuals(t),
            cuboid_residuals=cuboid_residuals(t),
            profile_residuals=profile,
            sextic_residual=sextic_residual(D, domain.lift(self.w)),
            e21_printed=printed,
            e21_reference=domain.lift(self.e21_reference),
        )


def _e21_value(pt, source, pairing, domain):
    if source == "derived":
        if pairing is None:
            raise BranchUndefinedError("derived E21 needs the face-diagonal roots")
        return pairing.e21
    return domain.lift(e21_closed_form(pt, source))


def solve_branch1(pt: ParamPoint, w1, *, e21_source: str = "derived") -> BranchSolution:
    """Edges from the edge cubic at ``w1``, face diagonals from the linear system."""
    if e21_source not in E21_CHOICES:
        raise ValueError(f"unknown E21 source {e21_source!r}")
    pt = ParamPoint.of(*pt)
    domain = domain_of(w1)
    w1 = domain.lift(w1)
    E = e_full(pt, "printed-q4variant")
    x = cubic_roots_from_w(cubic_coeffs(pt, 1), w1)
    E01, E11, E12 = (domain.lift(v) for v in (E.E01, E.E11, E.E12))
    try:
        pairing = derive_pairing(x, cubic_root_multiset(pt, 2, domain), E11, E12)
    except BranchUndefinedError:
        if e21_source == "derived":
            raise
        pairing = None
    e21 = _e21_value(pt, e21_source, pairing, domain)
    x1, x2, x3 = x
    M = ((1, 1, 1), (x2 + x3, x3 + x1, x1 + x2), (x2 * x3, x3 * x1, x1 * x2))
    notes = []
    try:
        d = _solve3([[domain.lift(v) for v in r] for r in M], [E01, E11, e21])
    except _Singular:
        if e21_source != "derived":
            raise BranchUndefinedError("branch undefined at this point: linear system singular")
        d = pairing.alignment
        notes.append("linear system singular; face diagonals taken from the pairing")
    if pairing is not None and pairing.ambiguous:
        notes.append(f"pairing ambiguous: {len(pairing.matches)} alignments, first taken")
    reference = pairing.e21 if pairing is not None else e21
    return BranchSolution(
        pt=pt,
        branch=1,
        w=w1,
        tuple=CuboidTuple.from_parts(x, d, 1),
        mode=domain.label,
        e21_reference=reference,
        e21_source=e21_source,
        pairing_ambiguous=bool(pairing and pairing.ambiguous),
        notes=tuple(notes),
    )


def solve_branch2(pt: ParamPoint, w2) -> BranchSolution:
    """Face diagonals from the face-diagonal cubic at ``w2``, edges linearly."""
    pt = ParamPoint.of(*pt)
    domain = domain_of(w2)
    w2 = domain.lift(w2)
    E = e_full(pt, "printed-q4variant")
    d = cubic_roots_from_w(cubic_coeffs(pt, 2), w2)
    E10, E11, E12 = (domain.lift(v) for v in (E.E10, E.E11, E.E12))
    d1, d2, d3 = d
    M = ((1, 1, 1), (d2 + d3, d3 + d1, d1 + d2), (d2 * d3, d3 * d1, d1 * d2))
    notes = []
    pairing = None
    try:
        x = _solve3([[domain.lift(v) for v in r] for r in M], [E10, E11, E12])
    except _Singular:
        pairing = derive_edge_pairing(d, cubic_root_multiset(pt, 1, domain), E11, E12)
        x = pairing.alignment
        notes.append("linear system singular; edges taken from the pairing")
        if pairing.ambiguous:
            notes.append(f"pairing ambiguous: {len(pairing.matches)} alignments, first taken")
    if pairing is None:
        try:
            pairing = derive_edge_pairing(d, cubic_root_multiset(pt, 1, domain), E11, E12)
        except (BranchUndefinedError, PairingError) as exc:
            notes.append(f"E21 reference from the tuple itself ({exc})")
    reference = pairing.e21 if pairing is not None else _mixed_e21(x, d)
    return BranchSolution(
        pt=pt,
        branch=2,
        w=w2,
        tuple=CuboidTuple.from_parts(x, d, 1),
        mode=domain.label,
        e21_reference=reference,
        pairing_ambiguous=bool(pairing and pairing.ambiguous),
        notes=tuple(notes),
    )


def solve_branch(pt, w, branch: int, **kwargs) -> BranchSolution:
    if branch == 1:
        return solve_branch1(pt, w, **kwargs)
    if branch == 2:
        return solve_branch2(pt, w)
    raise ValueError(f"branch must be 1 or 2, got {branch!r}")


# --- conversions -------------------------------------------------------------


def _check_on_surface(pt, branch, w):
    D = reduce_D(cubic_coeffs(pt, branch)).value
    domain = domain_of(w)
    if not on_sextic(domain.lift(D), w):
        raise OffSurfaceError(f"converted w misses the branch {branch} sextic")


def convert_w1_to_w2(pt: ParamPoint, w1, *, e21_source: str = "derived"):
    pt = ParamPoint.of(*pt)
    sol = solve_branch1(pt, w1, e21_source=e21_source)
    w2 = w_from_roots(*sol.tuple.d)
    _check_on_surface(pt, 2, w2)
    return w2


def convert_w2_to_w1(pt: ParamPoint, w2):
    pt = ParamPoint.of(*pt)
    sol = solve_branch2(pt, w2)
    w1 = w_from_roots(*sol.tuple.x)
    _check_on_surface(pt, 1, w1)
    return w1


def roundtrip_check(pt: ParamPoint, w, branch: int, *, e21_source: str = "derived"):
    """``|w1(w2(w)) - w|`` on branch 1, ``|w2(w1(w)) - w|`` on branch 2."""
    if branch == 1:
        back = convert_w2_to_w1(pt, convert_w1_to_w2(pt, w, e21_source=e21_source))
    elif branch == 2:
        back = convert_w1_to_w2(pt, convert_w2_to_w1(pt, w), e21_source=e21_source)
    else:
        raise ValueError(f"branch must be 1 or 2, got {branch!r}")
    w = domain_of(back).lift(w)
    return abs(back - w)


@dataclass(frozen=True)
class CoincidenceReport:
    first: BranchSolution
    second: BranchSolution
    dx: tuple
    dd: tuple

    @property
    def differences(self) -> tuple:
        return (*self.dx, *self.dd)

    @property
    def max_difference(self):
        return max(abs(v) for v in self.differences)

    @property
    def coincide(self) -> bool:
        return all(is_zero(v) for v in self.differences)


def coincidence_check(pt: ParamPoint, w1, *, e21_source: str = "derived") -> CoincidenceReport:
    """Solve branch 1 at ``w1`` and branch 2 at the converted ``w2``; compare."""
    pt = ParamPoint.of(*pt)
    first = solve_branch1(pt, w1, e21_source=e21_source)
    w2 = w_from_roots(*first.tuple.d)
    _check_on_surface(pt, 2, w2)
    second = solve_branch2(pt, w2)
    dx = tuple(a - b for a, b in zip(first.tuple.x, second.tuple.x))
    dd = tuple(a - b for a, b in zip(first.tuple.d, second.tuple.d))
    return CoincidenceReport(first, second, dx, dd)
