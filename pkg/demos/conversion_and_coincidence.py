# %% [markdown]
# # The two branches describe the same solutions
#
# A value of w on the first branch converts to one on the second and back.
# Solving along either branch then yields the same tuple.

# %%
from fractions import Fraction

from cuboidfactor import (
    ParamPoint,
    coincidence_check,
    convert_w1_to_w2,
    on_surface_w,
    roundtrip_check,
)

pt = ParamPoint(Fraction(3, 2), Fraction(-2, 5))
w1 = on_surface_w(pt, 1, 128)
w2 = convert_w1_to_w2(pt, w1)
print("w1 =", f"{float(w1):.15f}", " w2 =", f"{float(w2):.15f}")
print("roundtrip error:", f"{float(roundtrip_check(pt, w1, 1)):.1e}")

report = coincidence_check(pt, w1)
print("largest difference between the two solutions:", f"{float(report.max_difference):.1e}")
print("coincide:", report.coincide)

# %% [markdown]
# Exact inputs stay exact: at (1/2, 1/2) the conversion is a rational map.

# %%
half = ParamPoint(Fraction(1, 2), Fraction(1, 2))
print(convert_w1_to_w2(half, Fraction(21)))
print(coincidence_check(half, Fraction(21)).coincide)
