# %%
# Small set-weighted graphs where the single-part conjecture disagrees with
# sigma. Everything is exact, so every mismatch is a real one.
from chromsink.swgraph import SetWeightedGraph, csf_e
from chromsink.symfunc import sigma
from chromsink.verify import verify_conjecture

# %%
# Weights (1, 3, 1), one edge v1-v2 and an isolated v3.
G = SetWeightedGraph.from_weights([1, 3, 1], [(0, 1)])
print(csf_e(G))
r = verify_conjecture(G, 3, 1)
print(r.describe())

# %%
# The isolated vertex contributes a factor p_1. Dropping it leaves the
# one-edge graph (1, 3) and shifts mu down by one, which is the range
# a < mu < b where the one-edge formula is known not to apply.
H = SetWeightedGraph.from_weights([1, 3], [(0, 1)])
print("sigma_(2),1 of the one-edge graph:", sigma(csf_e(H), [2], 1))

# %%
# A connected example: the path 3 - 1 - 1 - 2.
P = SetWeightedGraph.from_weights([1, 1, 2, 3], [(0, 1), (1, 2), (0, 3)])
print(verify_conjecture(P, 4, 1).describe())

# %%
# How often does it fail? A seeded sweep over small random graphs.
from fractions import Fraction
from chromsink.verify import FuzzConfig, SweepSummary, fuzz

cfg = FuzzConfig(seed=7, trials=60, max_vertices=3, max_weight=3,
                 edge_probability=Fraction(1, 2), statement="conjecture")
s = SweepSummary.of(fuzz(cfg))
print(f"pass {s.passed}  fail {s.failed}  precondition-unmet {s.unmet}")
for rep in s.failures[:3]:
    print(rep.describe())
