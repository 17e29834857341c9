# %% [markdown]
# # Factor solutions in small integers
#
# Among positive integer tuples with a whole space diagonal, any solution of
# the eight factor equations must already be a perfect cuboid.  A brute
# search looks for a counterexample.

# %%
from cuboidfactor import CuboidTuple, check_implication, search_positive_factor_solutions

report = search_positive_factor_solutions(20)
print("tuples examined:", report.tuples_examined)
print("factor solutions:", report.factor_solutions)
print("counterexamples:", report.counterexamples)

# %% [markdown]
# The positivity assumption matters.  With zero and negative entries the
# factor equations can hold for tuples that are not cuboids.

# %%
t = CuboidTuple(0, 0, 1, -1, 1, 0, 1)
print(check_implication(t))
