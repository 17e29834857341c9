# %% [markdown]
# # From three roots to six sextic roots and back
#
# A monic cubic with distinct roots collapses to one parameter D.  The roots
# come back from any one solution w of a sextic in w, up to a permutation
# that depends on which of the six solutions was picked.

# %%
from fractions import Fraction

from cuboidfactor import (
    cubic_from_roots,
    cubic_roots_from_w,
    reduce_D,
    sextic_residual,
    sextic_roots_from_cubic_roots,
)
from cuboidfactor.cuboid import permute

roots = (Fraction(2), Fraction(-1, 3), Fraction(5, 7))
A = cubic_from_roots(*roots)
D = reduce_D(A).value
print("cubic:", [str(a) for a in A])
print("D =", D)

# %%
table = sextic_roots_from_cubic_roots(*roots)
for w, sigma in table:
    recovered = cubic_roots_from_w(A, w)
    print(
        f"w = {str(w):>12}  sextic residual {sextic_residual(D, w)}  "
        f"sigma {sigma}  recovered matches: {recovered == permute(roots, sigma)}"
    )
