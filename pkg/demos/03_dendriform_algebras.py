"""Dendriform algebras by structure constants.

The shipped catalog holds the twelve two-dimensional algebras.  Each is
checked against the three dendriform identities and against
associativity of the sum of its two products.
"""
# %%
from dend.algebra import PREC, SUCC, DendriformAlgebra, bilinear_apply, check_axioms, sum_associativity_check
from dend.catalog import default_catalog

catalog = default_catalog()
for alg in catalog.algebras:
    status = "ok" if not check_axioms(alg) and not sum_associativity_check(alg) else "violations"
    params = f" (parameters: {', '.join(alg.table.names)})" if alg.table.names else ""
    print(f"{alg.id:9s} {status}{params}")

# %% Products extend bilinearly.  In Dend2_1, e1 < e1 = e1 and e1 > e2 = e2.
d1 = catalog.algebra("Dend2_1")
e1, e2 = d1.basis_vector(1), d1.basis_vector(2)
print("e1 < e1 =", [str(c) for c in bilinear_apply(d1, PREC, e1, e1)])
print("e1 > e2 =", [str(c) for c in bilinear_apply(d1, SUCC, e1, e2)])

# %% Break an identity on purpose: adding e2 < e1 = e1 to Dend2_1.
prec = {(1, 1): [1, 0], (2, 1): [1, 0]}
succ = {(1, 2): [0, 1]}
broken = DendriformAlgebra.from_products("broken", 2, prec, succ)
for v in check_axioms(broken)[:3]:
    print("violation:", v)
