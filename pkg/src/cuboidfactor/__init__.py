"""Perfect-cuboid factor equations and their two-branch parametric solutions."""

from .branches import (
    BranchSolution,
    coincidence_check,
    convert_w1_to_w2,
    convert_w2_to_w1,
    on_surface_w,
    roundtrip_check,
    solve_branch,
    solve_branch1,
    solve_branch2,
)
from .cubic import (
    CubicCoeffs,
    admissibility,
    cubic_from_roots,
    cubic_roots_from_w,
    reduce_D,
    sextic_residual,
    sextic_roots_from_cubic_roots,
    w_from_roots,
)
from .cuboid import (
    CuboidTuple,
    check_implication,
    cuboid_residuals,
    e_profile,
    factor_residuals,
    search_positive_factor_solutions,
)
from .errors import CuboidError
from .parametrization import ParamPoint, cubic_coeffs, d1, d2, d_parameters, e_full
from .scalars import EXACT, Numeric
from .scan import scan, scan_point

__all__ = [
    "BranchSolution", "CubicCoeffs", "CuboidError", "CuboidTuple", "EXACT",
    "Numeric", "ParamPoint", "admissibility", "check_implication",
    "coincidence_check", "convert_w1_to_w2", "convert_w2_to_w1", "cubic_coeffs",
    "cubic_from_roots", "cubic_roots_from_w", "cuboid_residuals", "d1", "d2",
    "d_parameters", "e_full", "e_profile", "factor_residuals", "on_surface_w",
    "reduce_D", "roundtrip_check", "scan", "scan_point",
    "search_positive_factor_solutions", "sextic_residual",
    "sextic_roots_from_cubic_roots", "solve_branch", "solve_branch1",
    "solve_branch2", "w_from_roots",
]
