"""
=============================================
Intervals, Hasse quivers and the mutation bound
=============================================

Silting objects between A[n] and A, their covering relations, and how many
of them contain a fixed almost complete summand U.
"""

# %%
# Counting intervals
# ------------------

from siltlab import QuiverA, enumerate_interval, hasse, mutate, verify_mutation_bound
from siltlab.derived import a2_object
from siltlab.silting import SiltingCandidate, interval_pool, projective_silting

for spec in ("a2", "a3", "a3:FB"):
    Q = QuiverA.parse(spec)
    A = projective_silting(Q)
    print(spec, [len(enumerate_interval(Q, A, n)) for n in range(4)])

# %%
# The two-term Hasse quiver of A_2 is a pentagon.

Q = QuiverA.parse("a2")
A = projective_silting(Q)
H = hasse(Q, enumerate_interval(Q, A, 1))
for T, R in H.covers():
    print(T.labels(Q), "->", R.labels(Q))

# %%
# Mutation is the cover that keeps all but one summand.

print(mutate(Q, A, a2_object(Q, 2), "left").labels(Q))
print(mutate(Q, A, a2_object(Q, 2), "right").labels(Q))

# %%
# The bound
# ---------
#
# Starting from 1 + 5 the pool of [A[2], A] has seven summands X_1..X_7.
# Fixing U = X_4 leaves two silting objects, under the bound n + 1 = 3.

A = SiltingCandidate.of([a2_object(Q, 1), a2_object(Q, 5)])
pool = sorted(interval_pool(Q, A, 2), key=lambda X: X.to_json(Q)["label"])
print("pool labels:", [X.to_json(Q)["label"] for X in pool])
hits, ok = verify_mutation_bound(Q, A, [pool[3]], 2)
print("silt_U:", [P.labels(Q) for P in hits], "bound holds:", ok)

# %%
# From the projectives the pool has eight summands and every U attains the
# bound.

A = projective_silting(Q)
interval = enumerate_interval(Q, A, 2)
print(sorted({len(verify_mutation_bound(Q, A, [X], 2, interval)[0]) for X in interval_pool(Q, A, 2)}))
