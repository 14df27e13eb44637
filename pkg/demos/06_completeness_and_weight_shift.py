"""Are the listed families exhaustive, and do they survive a weight change?

``completeness_check`` samples every solved component and asks whether
some claim reproduces each sample.  ``weight_shift_check`` re-tests a
weight-0 Rota-Baxter family against the weight-1 identity.
"""
# %%
from dend.catalog import default_catalog
from dend.operators import COLUMN, PAPER, ROW, STANDARD, rota_baxter
from dend.verify import completeness_check, weight_shift_check

catalog = default_catalog()
d1 = catalog.algebra("Dend2_1")
claims = catalog.claims_for("Dend2_1", rota_baxter(0))
for conv in (ROW, COLUMN):
    s = completeness_check(d1, rota_baxter(0), claims, conv, STANDARD, seed=42)
    print(f"weight 0, {conv}: {s.status}, {len(s.missed_points)} of {s.sampled} samples uncovered")

# %% The weight-1 tables fit one reading of the weight term better than the other.
w1 = catalog.claims_for("Dend2_1", rota_baxter(1))
for tail in (STANDARD, PAPER):
    s = completeness_check(d1, rota_baxter(1), w1, ROW, tail, seed=42)
    print(f"weight 1, {tail} tail: {s.status} with {len(s.components)} component(s)")

# %% A weight-0 family re-checked at weight 1: only t = 0 survives.
family = claims[0].renamed({"a12": "t"})
print("weight shift:", weight_shift_check(family, d1, 1, ROW))
