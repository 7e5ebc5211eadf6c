"""
Enumerating admissible invariant pairs
======================================

Given the degree n, the residue characteristic p, a field of rationality K
and a duality type, the constraint engine lists every pair of invariant
vectors (jl, lp) allowed by the local sum rules, the Benard-Schacher
symmetry, the torsion bound and global reciprocity.
"""

from collections import Counter

from brauerkit import ZERO, make_field, quadratic_field
from brauerkit.langlands_constraints import ConstraintScenario, InvariantPair, check_pair, enumerate_solutions

# %%
# Symplectic, n = 2, p = 3, K = Q: the sum at 3 is forced to be 1/2.
sc = ConstraintScenario(2, 3, duality_type="symplectic")
res = enumerate_solutions(sc)
print("p-sum", res.p_sum)
for s in res:
    print(s)

# %%
# Asking for the conjectural refinement keeps both pairs, since [K:Q] is odd.
print(len(enumerate_solutions(sc.with_conjecture())))

# %%
# Checking a single pair reports each constraint separately.
pair = InvariantPair(sc.field, {"3": "0", "inf": "1/2"}, {"3": "1/2"})
report = check_pair(sc, pair)
for name, r in report.results.items():
    print(f"{name:16s} {r.status:8s} {r.detail}")

# %%
# Over Q(i) the prime 5 splits into two places and the invariants at them
# are tied together by the Galois action on fourth roots of unity.
QI = make_field(4)
res = enumerate_solutions(ConstraintScenario(4, 5, QI))
print(res.status, len(res), "solutions")
print(Counter(tuple(str(s.jl.get(v, ZERO)) for v in QI.places_over(5)) for s in res))

# %%
# Self-dual scenarios over a real quadratic field: with two places over 11
# the individual values are no longer pinned down.
res = enumerate_solutions(ConstraintScenario(2, 11, quadratic_field(5), "orthogonal"))
print(res.status, len(res), {v.label: str(x) for v, x in res.forced.items()})

# %%
# An empty solution set names the first constraint that cannot be met.
print(enumerate_solutions(ConstraintScenario(1, 3)).violated)
