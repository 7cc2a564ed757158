"""Set-weighted multigraphs and their chromatic symmetric functions.

A vertex ``v`` carries a finite set ``ω(v)`` of positive integer labels,
its "mini-vertices"; label sets of distinct vertices are disjoint and the
integer weight is ``w(v) = |ω(v)|``.  Graphs are immutable and hashable so
that derived data (orientations, stable sets, expansions) can be cached per
graph.

Vertices are addressed by position ``0..n-1`` internally; ``ids`` keeps the
user-facing names.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition, partially_dominates
from .symfunc import Basis, SymFunc, p_to_e


class GraphFormatError(ValueError):
    """Raised for malformed graph documents; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True, eq=True)
class SetWeightedGraph:
    ids: tuple[str, ...]
    omega: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if len(self.ids) != len(self.omega):
            raise ValueError("ids and omega differ in length")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("duplicate vertex ids")
        seen: set[int] = set()
        for vid, labels in zip(self.ids, self.omega):
            if not labels:
                raise ValueError(f"vertex {vid!r} has an empty label set")
            if any(x < 1 for x in labels):
                raise ValueError(f"vertex {vid!r} has a non-positive label")
            if seen & labels:
                raise ValueError(f"vertex {vid!r} reuses labels {sorted(seen & labels)}")
            seen |= labels
        n = len(self.ids)
        canon = []
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            canon.append((min(u, v), max(u, v)))
        object.__setattr__(self, "omega", tuple(frozenset(s) for s in self.omega))
        object.__setattr__(self, "edges", tuple(canon))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_weights(cls, weights: Sequence[int], edges: Iterable[tuple[int, int]] = (),
                     ids: Sequence[str] | None = None) -> "SetWeightedGraph":
        """Consecutive labels ``1..w_1``, ``w_1+1..w_1+w_2``, ..."""
        omega, start = [], 1
        for w in weights:
            if w < 1:
                raise ValueError(f"weights must be positive, got {w}")
            omega.append(frozenset(range(start, start + w)))
            start += w
        if ids is None:
            ids = [f"v{i + 1}" for i in range(len(weights))]
        return cls(tuple(ids), tuple(omega), tuple(edges))

    # -- basic data -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def weight(self, v: int) -> int:
        return len(self.omega[v])

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.omega)

    def weight_of(self, vs: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vs)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    @cached_property
    def simple_edges(self) -> tuple[tuple[int, int], ...]:
        """Distinct non-loop vertex pairs, in order of first appearance."""
        seen: dict[tuple[int, int], None] = {}
        for u, v in self.edges:
            if u != v:
                seen.setdefault((u, v), None)
        return tuple(seen)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets ignoring multiplicity; a looped vertex is its own neighbor."""
        adj: list[set[int]] = [set() for _ in self.vertices]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def index(self, vid: str) -> int:
        try:
            return self.ids.index(vid)
        except ValueError:
            raise KeyError(f"no vertex {vid!r}") from None

    def is_unweighted(self) -> bool:
        return all(w == 1 for w in self.weights)

    def __repr__(self) -> str:
        verts = ", ".join(f"{i}:{self.weight(k)}" for k, i in enumerate(self.ids))
        edges = ", ".join(f"{self.ids[u]}-{self.ids[v]}" for u, v in self.edges)
        return f"SetWeightedGraph([{verts}], [{edges}])"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": vid, "omega": sorted(om)} for vid, om in zip(self.ids, self.omega)],
            "edges": [[self.ids[u], self.ids[v]] for u, v in self.edges],
        }

    # -- edge operations --------------------------------------------------

    def _edge_index(self, e) -> int:
        if isinstance(e, int):
            if not 0 <= e < len(self.edges):
                raise KeyError(f"no edge instance {e}")
            return e
        u, v = e
        if isinstance(u, str):
            u, v = self.index(u), self.index(v)
        key = (min(u, v), max(u, v))
        for i, edge in enumerate(self.edges):
            if edge == key:
                return i
        raise KeyError(f"no edge {e!r}")

    def delete_edge(self, e) -> "SetWeightedGraph":
        """Remove one instance of ``e`` (an edge index or an endpoint pair)."""
        i = self._edge_index(e)
        return SetWeightedGraph(self.ids, self.omega, self.edges[:i] + self.edges[i + 1:])

    def contract_edge(self, e) -> "SetWeightedGraph":
        """Identify the endpoints of ``e``; the merged vertex takes the union
        of the two label sets and sits at the smaller endpoint's position.
        Parallel copies of ``e`` become loops.  Contracting a loop deletes it."""
        i = self._edge_index(e)
        a, b = self.edges[i]
        if a == b:
            return self.delete_edge(i)
        rest = self.edges[:i] + self.edges[i + 1:]

        def relabel(x: int) -> int:
            if x == b:
                x = a
            return x - 1 if x > b else x

        ids = [vid for k, vid in enumerate(self.ids) if k != b]
        ids[a] = f"{self.ids[a]}+{self.ids[b]}"
        omega = [om for k, om in enumerate(self.omega) if k != b]
        omega[a] = self.omega[a] | self.omega[b]
        return SetWeightedGraph(tuple(ids), tuple(omega), tuple((relabel(u), relabel(v)) for u, v in rest))

    def add_edge(self, u: int, v: int) -> "SetWeightedGraph":
        return SetWeightedGraph(self.ids, self.omega, self.edges + ((u, v),))

    def induced(self, keep: Iterable[int]) -> "SetWeightedGraph":
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        edges = tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        return SetWeightedGraph(tuple(self.ids[v] for v in keep), tuple(self.omega[v] for v in keep), edges)


def parse_graph(doc: Mapping) -> SetWeightedGraph:
    """Build a graph from its JSON document.

    ``{"vertices": [{"id": ..., "omega": [...]} | {"id": ..., "weight": k}],
    "edges": [[id, id], ...]}``.  A ``weight`` vertex gets consecutive labels
    continuing after the largest label assigned so far.
    """
    if not isinstance(doc, Mapping):
        raise GraphFormatError("document", "expected a JSON object")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise GraphFormatError("vertices", "expected a non-empty list")
    ids: list[str] = []
    omega: list[frozenset[int]] = []
    used: set[int] = set()
    top = 0
    for k, vert in enumerate(verts):
        where = f"vertices[{k}]"
        if not isinstance(vert, Mapping) or "id" not in vert:
            raise GraphFormatError(where, "expected an object with an 'id'")
        vid = vert["id"]
        if not isinstance(vid, str):
            raise GraphFormatError(f"{where}.id", "must be a string")
        if vid in ids:
            raise GraphFormatError(f"{where}.id", f"duplicate vertex id {vid!r}")
        extra = set(vert) - {"id", "omega", "weight"}
        if extra:
            raise GraphFormatError(where, f"unknown keys {sorted(extra)}")
        if "omega" in vert and "weight" in vert:
            raise GraphFormatError(where, "give either 'omega' or 'weight', not both")
        if "omega" in vert:
            raw = vert["omega"]
            if not isinstance(raw, list) or not raw:
                raise GraphFormatError(f"{where}.omega", "must be a non-empty list of labels")
            if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in raw):
                raise GraphFormatError(f"{where}.omega", "labels must be positive integers")
            labels = frozenset(raw)
            if len(labels) != len(raw):
                raise GraphFormatError(f"{where}.omega", "repeated label")
        elif "weight" in vert:
            w = vert["weight"]
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise GraphFormatError(f"{where}.weight", "must be a positive integer")
            labels = frozenset(range(top + 1, top + 1 + w))
        else:
            raise GraphFormatError(where, "needs 'omega' or 'weight'")
        clash = used & labels
        if clash:
            raise GraphFormatError(f"{where}.omega", f"labels {sorted(clash)} already used by another vertex")
        used |= labels
        top = max(top, max(labels))
        ids.append(vid)
        omega.append(labels)
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError("edges", "expected a list")
    pos = {vid: i for i, vid in enumerate(ids)}
    edges = []
    for k, e in enumerate(raw_edges):
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"edges[{k}]", "expected a pair of vertex ids")
        for end in e:
            if end not in pos:
                raise GraphFormatError(f"edges[{k}]", f"unknown vertex {end!r}")
        edges.append((pos[e[0]], pos[e[1]]))
    extra = set(doc) - {"vertices", "edges"}
    if extra:
        raise GraphFormatError("document", f"unknown keys {sorted(extra)}")
    return SetWeightedGraph(tuple(ids), tuple(omega), tuple(edges))


# --------------------------------------------------------------------------
# chromatic symmetric function

def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@lru_cache(maxsize=4096)
def csf_p(G: SetWeightedGraph) -> SymFunc:
    """p-basis expansion ``Σ_{A ⊆ E} (−1)^{|A|} p_{λ(A)}`` where ``λ(A)``
    lists the total weights of the components of ``(V, A)``.

    Parallel edges are collapsed first (they do not change the set of proper
    colorings) and any loop yields zero.
    """
    d = G.total_weight
    if G.has_loop:
        return SymFunc.zero(Basis.P, d)
    edges = G.simple_edges
    m = len(edges)
    out: dict[Partition, int] = defaultdict(int)
    weights = G.weights
    for mask in range(1 << m):
        parent = list(G.vertices)
        bits = 0
        for i in range(m):
            if mask >> i & 1:
                bits += 1
                u, v = edges[i]
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
        comp: dict[int, int] = defaultdict(int)
        for v in G.vertices:
            comp[_find(parent, v)] += weights[v]
        out[Partition(comp.values())] += -1 if bits & 1 else 1
    return SymFunc(Basis.P, d, out)


def csf_p_deletion_contraction(G: SetWeightedGraph) -> SymFunc:
    """Same function computed by ``X_G = X_{G∖e} − X_{G/e}`` down to edgeless graphs."""
    d = G.total_weight
    if G.has_loop:
        return SymFunc.zero(Basis.P, d)
    if not G.edges:
        return SymFunc(Basis.P, d, {Partition(G.weights): 1})
    return csf_p_deletion_contraction(G.delete_edge(0)) - csf_p_deletion_contraction(G.contract_edge(0))


@lru_cache(maxsize=4096)
def csf_e(G: SetWeightedGraph) -> SymFunc:
    return p_to_e(csf_p(G))


# --------------------------------------------------------------------------
# stable sets

def is_stable(G: SetWeightedGraph, vs: Iterable[int]) -> bool:
    vs = set(vs)
    return all(not (G.adjacency[v] & vs) for v in vs)


@lru_cache(maxsize=4096)
def stable_sets(G: SetWeightedGraph) -> tuple[frozenset[int], ...]:
    """All nonempty stable sets (looped vertices never qualify)."""
    out = []
    for r in range(1, G.n + 1):
        for vs in combinations(G.vertices, r):
            if is_stable(G, vs):
                out.append(frozenset(vs))
    return tuple(out)


@lru_cache(maxsize=4096)
def allowable_partitions(G: SetWeightedGraph) -> frozenset[Partition]:
    """Every ``ν`` realized as the weights of a family of disjoint nonempty
    stable sets.

    Families are generated with increasing minimum vertex, which reaches each
    unordered family once; since the realized ν is sorted anyway, every
    ordering of the family gives the same partition."""
    stables = stable_sets(G)
    by_min: dict[int, list[frozenset[int]]] = defaultdict(list)
    for s in stables:
        by_min[min(s)].append(s)
    found: set[Partition] = set()

    def extend(used: frozenset[int], lowest: int, parts: tuple[int, ...]):
        for v in range(lowest, G.n):
            if v in used:
                continue
            for s in by_min[v]:
                if s & used:
                    continue
                new_parts = parts + (G.weight_of(s),)
                found.add(Partition(new_parts))
                extend(used | s, v + 1, new_parts)

    extend(frozenset(), 0, ())
    return frozenset(found)


def max_stable_weight(G: SetWeightedGraph) -> int:
    return max((G.weight_of(s) for s in stable_sets(G)), default=0)


def is_maximal(G: SetWeightedGraph, mu: Sequence[int]) -> bool:
    """``μ`` partially dominates every allowable partition of ``G``."""
    mu = Partition(mu)
    if mu.size > G.total_weight:
        raise ValueError(f"|μ| = {mu.size} exceeds the total weight {G.total_weight}")
    return all(partially_dominates(mu, nu) for nu in allowable_partitions(G))


# --------------------------------------------------------------------------
# s-allowability

@dataclass(frozen=True)
class StablePair:
    s_side: frozenset[int]
    t_side: frozenset[int]
    components: tuple[tuple[frozenset[int], frozenset[int]], ...]


def components(G: SetWeightedGraph, vs: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the induced subgraph ``G[vs]``, sorted by minimum vertex."""
    vs = set(vs)
    out = []
    while vs:
        start = min(vs)
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in G.adjacency[x]:
                if y in vs and y not in comp:
                    comp.add(y)
                    stack.append(y)
        vs -= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


@lru_cache(maxsize=1024)
def stable_pairs(G: SetWeightedGraph) -> tuple[StablePair, ...]:
    """Unordered pairs of disjoint stable sets in which every vertex on each
    side has a neighbor on the other side."""
    stables = stable_sets(G)
    out = []
    for i, s in enumerate(stables):
        for t in stables[i + 1:]:
            if s & t:
                continue
            if not all(G.adjacency[v] & t for v in s):
                continue
            if not all(G.adjacency[u] & s for u in t):
                continue
            comps = tuple((m & s, m & t) for m in components(G, s | t))
            out.append(StablePair(s, t, comps))
    return tuple(out)


def s_allowability_violation(G: SetWeightedGraph, mu: int) -> tuple[StablePair, int, int] | None:
    """A witness ``(pair, component index, μ_i)`` showing ``μ`` is not
    s-allowable, or ``None``.

    For a pair with ``k`` components the other ``k − 1`` parts of the
    composition are free positive integers, so component ``i`` can receive
    any ``f`` with ``μ − f ≥ k − 1`` (and ``f = μ`` exactly when ``k = 1``).
    """
    for pair in stable_pairs(G):
        k = len(pair.components)
        for i, (s_i, t_i) in enumerate(pair.components):
            lo, hi = sorted((G.weight_of(s_i), G.weight_of(t_i)))
            if k == 1:
                candidates = [mu] if lo < mu < hi else []
            else:
                candidates = [f for f in range(lo + 1, hi) if 1 <= f <= mu - (k - 1)]
            if candidates:
                return pair, i, candidates[0]
    return None


def is_s_allowable(G: SetWeightedGraph, mu: int) -> bool:
    if mu < 1:
        raise ValueError("μ must be a positive integer")
    return s_allowability_violation(G, mu) is None


def is_claw_free(G: SetWeightedGraph) -> bool:
    """No four vertices induce ``K_{1,3}``.  Loops are ignored here."""
    adj = [a - {v} for v, a in enumerate(G.adjacency)]
    for c in G.vertices:
        for x, y, z in combinations(sorted(adj[c]), 3):
            if y not in adj[x] and z not in adj[x] and z not in adj[y]:
                return False
    return True


def iter_labels(G: SetWeightedGraph, vs: Iterable[int]) -> Iterator[int]:
    for v in sorted(vs):
        yield from sorted(G.omega[v])
