# %% [markdown]
# # Solving the factor equations along both branches
#
# At (1, 1) the edge cubic has roots involving sqrt(7), so the solution is
# computed numerically at 128 digits.  E21 is derived from the root pairing
# and differs from the printed closed form; the diagnostics flag that.

# %%
from fractions import Fraction

from cuboidfactor import ParamPoint, on_surface_w, solve_branch1, solve_branch2

pt = ParamPoint(Fraction(1), Fraction(1))
w1 = on_surface_w(pt, 1, 128)
sol = solve_branch1(pt, w1)
diag = sol.diagnostics
print("x =", [f"{float(v):+.12f}" for v in sol.tuple.x])
print("d =", [f"{float(v):+.12f}" for v in sol.tuple.d])
print("largest residual:", f"{float(diag.residual_max):.1e}")
print("E21 used:", f"{float(diag.e21_reference):.12f}", " printed:", f"{float(diag.e21_printed):.12f}",
      " mismatch:", diag.e21_mismatch)

# %% [markdown]
# At (1/2, 1/2) both cubics have rational roots and the whole computation is
# exact.  The tuple has a zero edge, so it is not a cuboid, but every factor
# equation vanishes identically.

# %%
from cuboidfactor.cubic import cleared_sextic
from cuboidfactor.parametrization import d1, d2
from cuboidfactor.polynomials import rational_roots

half = ParamPoint(Fraction(1, 2), Fraction(1, 2))
for branch, D, solve in ((1, d1(half), solve_branch1), (2, d2(half), solve_branch2)):
    w = max(set(rational_roots(cleared_sextic(D))))
    exact = solve(half, w)
    print(f"branch {branch}, w = {w}")
    print("  x =", [str(v) for v in exact.tuple.x])
    print("  d =", [str(v) for v in exact.tuple.d])
    print("  residuals:", [str(r) for r in exact.diagnostics.factor_residuals])
