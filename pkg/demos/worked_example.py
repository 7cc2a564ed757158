# %%
# The path with weights 5, 7, 5: its chromatic symmetric function in the
# e-basis, the partial sum sigma_{(7),j} and where the value -65 comes from.
from chromsink.swgraph import SetWeightedGraph, csf_e, is_s_allowable
from chromsink.symfunc import sigma
from chromsink.weightmaps import conjecture_breakdown, conjecture_rhs, theorem_rhs

G = SetWeightedGraph.from_weights([5, 7, 5], [(0, 1), (1, 2)])
X = csf_e(G)
print(f"{len(X)} e-terms in degree {X.degree}")

# %%
# sigma sums the coefficients of e_lambda over lambda whose transpose
# starts with the prefix; j fixes the number of parts of the transpose.
for j in (1, 2, 3):
    print("sigma_(7),%d =" % j, sigma(X, [7], j))

# %%
# mu = 7 is s-allowable (6, 8 and 9 are not), so the conjectured right
# side applies.
print("rejected:", [mu for mu in range(1, 18) if not is_s_allowable(G, mu)])
print("conjecture rhs, j=3:", conjecture_rhs(G, 7, 3))

# %%
# Each orientation + choice of blocks that contributes, with its sign.
for c in conjecture_breakdown(G, 7, 3):
    doc = c.to_json(3)
    if doc["maps"]:
        print(doc["orientation"], "sinks", doc["sinks"], "maps", doc["maps"], "signed", doc["signed"])

# %%
# The proved theorem, for maximal partitions, agrees with sigma.
from chromsink.swgraph import allowable_partitions, is_maximal

maximal = [mu for mu in allowable_partitions(G) if is_maximal(G, mu)]
for mu in sorted(maximal)[:5]:
    js = range(1, G.total_weight - sum(mu) + 1)
    print(tuple(mu), all(sigma(X, mu, j) == theorem_rhs(G, mu, j) for j in js))
