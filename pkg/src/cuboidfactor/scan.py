"""Exact scan of the rational parameter plane for rational branch solutions.

For each point ``(b, c)`` the D-parameters are computed, the rational roots of
both sextics are found, and every usable root is pushed through the exact
branch solver.  A verified tuple with all six components positive would be a
rational perfect cuboid and is flagged loudly.

Points are visited in a canonical order: ascending ``max(height(b),
height(c))``, then by ``b``, then by ``c`` (numeric order).  Work may be
spread over processes, but records always come back in that order.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .branches import solve_branch
from .cubic import cleared_sextic
from .cuboid import factor_residuals, is_positive
from .errors import CuboidError
from .polynomials import rational_roots
from .parametrization import ParamPoint, d1, d2, singularities
from .scalars import format_scalar, height

CANDIDATE_NOTE = "PERFECT CUBOID CANDIDATE"

CSV_HEADER = (
    "b", "c", "singular", "D1", "D2", "rational_w1", "rational_w2",
    "solved", "positive", "residual_max", "note",
)


@dataclass(frozen=True)
class ScanRecord:
    b: str
    c: str
    singular: list = field(default_factory=list)
    D1: str = "undefined"
    D2: str = "undefined"
    rational_w1: list = field(default_factory=list)
    rational_w2: list = field(default_factory=list)
    solved: bool = False
    positive: bool = False
    residual_max: str = ""
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    def csv_row(self) -> list[str]:
        row = asdict(self)
        out = []
        for key in CSV_HEADER:
            v = row[key]
            if isinstance(v, list):
                v = ";".join(v)
            elif isinstance(v, bool):
                v = "true" if v else "false"
            out.append(v)
        return out


def rationals_up_to(bound: int) -> list[Fraction]:
    """Every reduced rational of height at most ``bound``, in numeric order."""
    if bound < 1:
        raise ValueError("height bound must be at least 1")
    seen = {Fraction(p, q) for q in range(1, bound + 1) for p in range(-bound, bound + 1)}
    return sorted(seen)


def scan_points(bound: int, region: str = "all") -> list[ParamPoint]:
    values = rationals_up_to(bound)
    if region == "positive":
        values = [v for v in values if v > 0]
    elif region != "all":
        raise ValueError(f"unknown region {region!r}")
    pts = [ParamPoint(b, c) for b in values for c in values]
    pts.sort(key=lambda p: (max(height(p.b), height(p.c)), p.b, p.c))
    return pts


def _distinct_rational_roots(D) -> list[Fraction]:
    return sorted(set(rational_roots(cleared_sextic(D))))


def scan_point(pt: ParamPoint, e21_source: str = "derived") -> ScanRecord:
    """Everything the scan reports about one parameter point.

    Per-step failures are written into ``note``; nothing here raises for a
    domain error.
    """
    pt = ParamPoint.of(*pt)
    notes: list[str] = []
    D = {}
    for name, fn in (("D1", d1), ("D2", d2)):
        try:
            D[name] = fn(pt)
        except CuboidError as exc:
            D[name] = None
            msg = str(exc)
            notes.append(msg if msg.startswith(name) else f"{name}: {msg}")
    roots = {
        1: _distinct_rational_roots(D["D1"]) if D["D1"] is not None else [],
        2: _distinct_rational_roots(D["D2"]) if D["D2"] is not None else [],
    }
    solved = positive = False
    residual = None
    for branch in (1, 2):
        for w in roots[branch]:
            if abs(w) == 1:
                continue
            try:
                kw = {"e21_source": e21_source} if branch == 1 else {}
                sol = solve_branch(pt, w, branch, **kw)
            except CuboidError as exc:
                msg = f"branch {branch}: {exc}"
                if msg not in notes:
                    notes.append(msg)
                continue
            res = max(abs(v) for v in factor_residuals(sol.tuple))
            if res != 0:
                notes.append(f"branch {branch} w={format_scalar(w)}: residual {format_scalar(res)}")
                continue
            solved = True
            residual = res if residual is None else max(residual, res)
            if is_positive(sol.tuple):
                positive = True
                notes.insert(0, f"{CANDIDATE_NOTE} (branch {branch}, w={format_scalar(w)})")
    return ScanRecord(
        b=format_scalar(pt.b),
        c=format_scalar(pt.c),
        singular=list(singularities(pt)),
        D1=format_scalar(D["D1"]) if D["D1"] is not None else "undefined",
        D2=format_scalar(D["D2"]) if D["D2"] is not None else "undefined",
        rational_w1=[format_scalar(w) for w in roots[1]],
        rational_w2=[format_scalar(w) for w in roots[2]],
        solved=solved,
        positive=positive,
        residual_max=format_scalar(residual) if residual is not None else "",
        note="; ".join(notes),
    )


def _scan_chunk(args) -> list[ScanRecord]:
    pts, e21_source = args
    return [scan_point(pt, e21_source) for pt in pts]


def scan(
    bound: int,
    *,
    region: str = "all",
    workers: int = 1,
    e21_source: str = "derived",
    chunk_size: int = 16,
) -> Iterator[ScanRecord]:
    """Yield one record per grid point in canonical order.

    The grid is cut into fixed chunks before any work starts and results are
    collected with an order-preserving map, so the worker count never changes
    the output.
    """
    pts = scan_points(bound, region)
    chunks = [pts[i : i + chunk_size] for i in range(0, len(pts), chunk_size)]
    jobs = [(chunk, e21_source) for chunk in chunks]
    if workers <= 1:
        for job in jobs:
            yield from _scan_chunk(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for records in pool.map(_scan_chunk, jobs):
            yield from records


def candidates(records: Iterable[ScanRecord]) -> list[ScanRecord]:
    return [r for r in records if r.positive]
