# %% [markdown]
# # The E-profile family and its two D-parameters
#
# Every rational point (b, c) off a handful of singular curves gives a full
# E-profile.  The profile fixes two monic cubics: one for the edges, one for
# the face diagonals.  Each cubic reduces to a single number D.

# %%
from fractions import Fraction

from cuboidfactor import ParamPoint, cubic_coeffs, d1, d2, e_full, reduce_D
from cuboidfactor.parametrization import biquadratic_residual, e_linear, singularities

pt = ParamPoint(Fraction(1), Fraction(1))
profile = e_full(pt, "corrected")
for name, value in profile.as_dict().items():
    print(f"{name:>4} = {value}")

# %% [markdown]
# The three linear entries always satisfy the biquadratic relation exactly.

# %%
print("biquadratic residual:", biquadratic_residual(*e_linear(pt), 1))

# %% [markdown]
# The closed forms for D1 and D2 agree with reducing the cubics directly.

# %%
for branch, closed in ((1, d1(pt)), (2, d2(pt))):
    A = cubic_coeffs(pt, branch)
    print(f"branch {branch}: cubic {[str(a) for a in A]}  D = {closed}  agrees: {closed == reduce_D(A).value}")

# %% [markdown]
# Points on a singular curve are refused by name.

# %%
print(singularities(ParamPoint(Fraction(0), Fraction(0))))
