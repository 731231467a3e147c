"""
=============================================
Orbit categories and cluster tilting
=============================================

C_d(kQ) = D^b(kQ) / nu_d has finitely many indecomposables. Silting objects
inside the fundamental domain correspond to its d-cluster tilting objects.
"""

# %%

import numpy as np

from siltlab import QuiverA, amiot_map_check, build_orbit, enumerate_ctilt, hom_orbit
from siltlab.orbit import OrbitFunctor, folded_a2_report

Q = QuiverA.parse("a2")
C = build_orbit(Q, OrbitFunctor.nu(2))
print(C.name, [str(X) for X in C.reps])
print(np.array([[hom_orbit(C, x, y, 1) for y in C.reps] for x in C.reps]))

# %%

for U in enumerate_ctilt(C, 2):
    print(sorted(str(X) for X in U))

# %%
# The silting-to-cluster-tilting map.

for spec, d in (("a2", 2), ("a2", 3), ("a3", 2)):
    r = amiot_map_check(QuiverA.parse(spec), d)
    print(spec, d, len(r["silt_in_F"]), len(r["ctilt"]), r["bijection"])

# %%
# Folding A_2 by a square root of the shift.

for d in range(1, 6):
    r = folded_a2_report(d)
    print(d, r["ind_count"], len(r["ctilt"]), r["largest_rigid"], "odd" if r["cy_hypothesis_holds"] else "even")
