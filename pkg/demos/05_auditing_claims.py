"""Auditing catalog claims.

Every claim is a parametric matrix.  ``verify_claim`` substitutes it into
the generated system and reports CONFIRMED, CONDITIONAL (with the
conditions the parameters must satisfy) or REFUTED.  ``cross_check``
repeats the question numerically at seeded sample points with an
independent evaluator.
"""
# %%
from collections import Counter

from dend.catalog import default_catalog
from dend.operators import COLUMN, ROW
from dend.verify import cross_check, verify_claim

catalog = default_catalog()
tally = Counter()
for claim in catalog.claims:
    alg = catalog.algebra(claim.algebra)
    for conv in (ROW, COLUMN):
        verdict = verify_claim(claim, alg, conv)
        tally[conv, verdict.status] += 1
        if claim.algebra == "Dend2_6" and conv == ROW:
            print(f"{claim.id:28s} {conv}: {verdict}")
print(dict(sorted(tally.items())))

# %% The numeric engine agrees with the symbolic verdicts.
claim = next(c for c in catalog.claims if c.id == "reynolds-Dend2_1-P3")
alg = catalog.algebra(claim.algebra)
verdict = verify_claim(claim, alg, ROW)
check = cross_check(claim, alg, verdict, ROW, seed=42, count=200)
print(claim.id, verdict, "| agreement at", check.points, "points:", check.agrees)
