"""Operator identities as polynomial systems, and their solution sets.

An operator is an unknown 2x2 matrix ``(a11 a12; a21 a22)``.  Plugging it
into an operator identity on every pair of basis vectors gives one
polynomial per coordinate.  The case-split solver then describes all
solutions as a list of components.
"""
# %%
from dend.catalog import default_catalog
from dend.groebner import component_sample, solve_components
from dend.operators import COLUMN, NIJENHUIS_KIND, REYNOLDS_KIND, ROW, build_system, kind_identities, rota_baxter

catalog = default_catalog()
d1 = catalog.algebra("Dend2_1")

for desc in kind_identities(NIJENHUIS_KIND):
    print("Nijenhuis identity:", desc.render())

# %% Weight-zero Rota-Baxter operators on Dend2_1 under the row convention,
# where P(e_i) = sum_j a_ij e_j.
system = build_system(d1, rota_baxter(0), ROW)
for label, poly in system.equations:
    if poly:
        print(f"  {label}: {poly}")

comps = solve_components(system.polynomials, system.unknowns, system.parameters)
for c in comps:
    print("component:", c.describe())
for pt in component_sample(comps[0], seed=42, count=3):
    print("  sample:", ", ".join(f"{v}={x}" for v, x in pt.items()))

# %% The same question under the column convention has a different answer.
col = build_system(d1, rota_baxter(0), COLUMN)
print("column convention:", [c.describe() for c in solve_components(col.polynomials, col.unknowns)])

# %% Reynolds operators on Dend2_1 split into several components.
rey = build_system(d1, REYNOLDS_KIND, ROW)
for c in solve_components(rey.polynomials, rey.unknowns):
    print("Reynolds component:", c.describe())
