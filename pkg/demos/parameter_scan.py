# %% [markdown]
# # Scanning the parameter plane
#
# Every rational (b, c) of bounded height is visited in a fixed order.  Both
# sextics are searched for rational roots, and any rational root is pushed
# through the exact solver.  A positive verified tuple would be a perfect
# cuboid.

# %%
from collections import Counter

from cuboidfactor import scan
from cuboidfactor.scan import candidates

records = list(scan(3, workers=2))
print("points:", len(records))
print("singular:", sum(bool(r.singular) for r in records))
print("with rational roots:", sum(bool(r.rational_w1 or r.rational_w2) for r in records))
print("exactly solved:", sum(r.solved for r in records))
print("perfect cuboid candidates:", len(candidates(records)))

# %%
for r in records:
    if r.solved:
        print(r.b, r.c, "w1:", r.rational_w1, "w2:", r.rational_w2)

# %% [markdown]
# Failures are kept per point rather than stopping the scan.

# %%
reasons = Counter(note.split(":")[0] for r in records for note in r.note.split("; ") if note)
print(reasons.most_common())
