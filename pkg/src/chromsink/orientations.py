"""Acyclic orientations and their sink levels.

Orientations are enumerated on the simple collapse of the graph (every
parallel copy of an edge must point the same way in an acyclic
orientation) and then lifted back onto the edge instances.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .swgraph import SetWeightedGraph


@dataclass(frozen=True)
class Orientation:
    """Directions for the simple edges of ``graph``; ``arcs[i]`` orients
    ``graph.simple_edges[i]`` as ``(tail, head)``."""

    graph: SetWeightedGraph
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def out_neighbors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in self.graph.vertices]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def acyclic(self) -> bool:
        if self.graph.has_loop:
            return False
        indeg = [0] * self.graph.n
        for _, v in self.arcs:
            indeg[v] += 1
        stack = [v for v in self.graph.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            u = stack.pop()
            seen += 1
            for v in self.out_neighbors[u]:
                indeg[v] -= 1
                if not indeg[v]:
                    stack.append(v)
        return seen == self.graph.n

    def edge_directions(self) -> tuple[tuple[int, int], ...]:
        """Direction of every edge instance of the (multi)graph."""
        lookup = {(min(u, v), max(u, v)): (u, v) for u, v in self.arcs}
        return tuple(lookup[e] for e in self.graph.edges)

    def sinks(self, within=None) -> frozenset[int]:
        """Sinks of the restriction to ``within`` (default: all vertices)."""
        vs = set(self.graph.vertices) if within is None else set(within)
        return frozenset(v for v in vs if not (self.out_neighbors[v] & vs))

    def describe(self) -> str:
        ids = self.graph.ids
        return ", ".join(f"{ids[u]}->{ids[v]}" for u, v in self.arcs) or "(no edges)"

    def to_json(self) -> list[list[str]]:
        ids = self.graph.ids
        return [[ids[u], ids[v]] for u, v in self.arcs]


@dataclass(frozen=True)
class SinkDecomposition:
    levels: tuple[frozenset[int], ...]
    counts: tuple[int, ...]
    type_seq: tuple[int, ...]

    def level_of(self, v: int) -> int:
        for i, lev in enumerate(self.levels, start=1):
            if v in lev:
                return i
        raise KeyError(v)

    def count(self, i: int) -> int:
        """``sink_i``, zero beyond the last level."""
        return self.counts[i - 1] if i <= len(self.counts) else 0


def enumerate_acyclic(G: SetWeightedGraph) -> Iterator[Orientation]:
    """Every acyclic orientation once, in lexicographic order of the
    direction bits of the simple edges (bit 0 keeps the stored order)."""
    if G.has_loop:
        return
    edges = G.simple_edges
    m = len(edges)
    arcs: list[tuple[int, int]] = []

    # below[x]: bitmask of vertices reachable from x along the arcs chosen so far
    def extend(i: int, below: tuple[int, ...]):
        if i == m:
            yield Orientation(G, tuple(arcs))
            return
        a, b = edges[i]
        for tail, head in ((a, b), (b, a)):
            if below[head] >> tail & 1:
                continue  # would close a cycle
            reach = below[head] | 1 << head
            new = tuple(r | reach if (x == tail or r >> tail & 1) else r for x, r in enumerate(below))
            arcs.append((tail, head))
            yield from extend(i + 1, new)
            arcs.pop()

    yield from extend(0, (0,) * G.n)


@lru_cache(maxsize=2048)
def acyclic_orientations(G: SetWeightedGraph) -> tuple[Orientation, ...]:
    return tuple(enumerate_acyclic(G))


def _levels_by_deletion(o: Orientation) -> list[frozenset[int]]:
    remaining = set(o.graph.vertices)
    levels = []
    while remaining:
        sinks = o.sinks(remaining)
        levels.append(sinks)
        remaining -= sinks
    return levels


def longest_path_lengths(o: Orientation) -> list[int]:
    """Vertex count of the longest directed path starting at each vertex."""
    memo: dict[int, int] = {}

    def depth(v: int) -> int:
        if v not in memo:
            memo[v] = 1 + max((depth(u) for u in o.out_neighbors[v]), default=0)
        return memo[v]

    return [depth(v) for v in o.graph.vertices]


def sink_decomposition(o: Orientation) -> SinkDecomposition:
    if not o.acyclic:
        raise ValueError("sink levels are only defined for acyclic orientations")
    levels = _levels_by_deletion(o)
    depth = longest_path_lengths(o)
    for i, lev in enumerate(levels, start=1):
        if any(depth[v] != i for v in lev):
            raise AssertionError(f"sink-deletion level {i} disagrees with longest paths in {o.describe()}")
    w = o.graph.weights
    return SinkDecomposition(
        tuple(levels),
        tuple(len(lev) for lev in levels),
        tuple(sum(w[v] for v in lev) for lev in levels),
    )


@lru_cache(maxsize=65536)
def _cached_decomposition(o: Orientation) -> SinkDecomposition:
    return sink_decomposition(o)


def count_by_sink_count(G: SetWeightedGraph) -> dict[int, int]:
    hist = Counter(len(o.sinks()) for o in acyclic_orientations(G))
    return dict(sorted(hist.items()))
