# %%
# Acyclic orientations, sink levels and Stanley's sink theorem on the claw.
from chromsink.orientations import acyclic_orientations, count_by_sink_count, sink_decomposition
from chromsink.swgraph import SetWeightedGraph, csf_e

claw = SetWeightedGraph.from_weights([1, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])
orients = acyclic_orientations(claw)
print(len(orients), "acyclic orientations")

# %%
# Levels come from deleting sinks repeatedly; each one is cross-checked
# against longest directed paths inside sink_decomposition.
for o in orients[:4]:
    dec = sink_decomposition(o)
    print(o.describe(), "| levels", [sorted(claw.ids[v] for v in L) for L in dec.levels])

# %%
# Number of orientations with j sinks equals the sum of e-coefficients
# over partitions with j parts.
X = csf_e(claw)
by_parts = {}
for lam, c in X.terms():
    by_parts[len(lam)] = by_parts.get(len(lam), 0) + c
print("orientations by sinks:", count_by_sink_count(claw))
print("e-coefficient sums:   ", dict(sorted(by_parts.items())))
