"""Weight maps paired with acyclic orientations: the combinatorial sides of
the sink-sequence identities.

Two families live here.

* Step weight maps ``S(v) = (S(v)_1, ..., S(v)_L)`` of disjoint subsets of
  ``ω(v)``.  A map is admissible for an orientation when, at every step,
  exactly the sinks of the residual graph receive a nonempty subset; a
  vertex leaves the residual graph once all of its labels are used.
  :func:`theorem_rhs` sums signs over these.

* Generalized 2-step maps, where arbitrary vertex subsets carry label sets.
  The first step lives on the first-level sinks; the second step is read off
  the label cycles of partially used sinks and from subsets of the newly
  uncovered second-level sinks, with their label pool truncated to the
  weight of the annihilated neighbors.  :func:`conjecture_rhs` sums signs
  over these.

Both come with an explicit enumerator that builds every map label by label
and a counting engine that only tracks sizes; the tests hold them against
each other.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterator, Mapping, Sequence

from .orientations import Orientation, _cached_decomposition, acyclic_orientations
from .partitions import Partition
from .swgraph import SetWeightedGraph, components


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _nonempty_subsets(items: Sequence) -> Iterator[tuple]:
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


# --------------------------------------------------------------------------
# step weight maps

@dataclass(frozen=True)
class StepWeightMap:
    """``steps[v]`` is the tuple ``(S(v)_1, ..., S(v)_L)``."""

    steps: tuple[tuple[frozenset[int], ...], ...]

    @property
    def length(self) -> int:
        return len(self.steps[0]) if self.steps else 0

    def wts(self) -> tuple[int, ...]:
        return tuple(sum(len(s[i]) for s in self.steps) for i in range(self.length))

    def is_valid_for(self, G: SetWeightedGraph) -> bool:
        if len(self.steps) != G.n:
            return False
        for v, parts in enumerate(self.steps):
            used: set[int] = set()
            for p in parts:
                if used & p or not p <= G.omega[v]:
                    return False
                used |= p
        return True


def residual_graphs(G: SetWeightedGraph, S: StepWeightMap) -> list[tuple[frozenset[int], tuple[frozenset[int], ...]]]:
    """``(V(G_i), ω_i)`` for ``i = 0..L``: step ``i`` strips ``S(·)_i`` from
    the labels and drops the vertices left without labels."""
    present = frozenset(G.vertices)
    omega = G.omega
    out = [(present, omega)]
    for i in range(S.length):
        omega = tuple(om - S.steps[v][i] for v, om in enumerate(omega))
        present = frozenset(v for v in present if omega[v])
        out.append((present, omega))
    return out


def is_admissible(o: Orientation, S: StepWeightMap) -> bool:
    G = o.graph
    if not S.is_valid_for(G):
        return False
    stages = residual_graphs(G, S)
    for i in range(S.length):
        present, _ = stages[i]
        sinks = o.sinks(present)
        for v in G.vertices:
            if bool(S.steps[v][i]) != (v in sinks):
                return False
    return True


def standard_form_check(o: Orientation, S: StepWeightMap, mu: Sequence[int]) -> bool:
    """Whether ``S`` (with ``len(mu) + 1`` steps) empties each level-``i``
    sink completely at step ``i ≤ ℓ`` and is supported exactly on the
    level-``(ℓ+1)`` sinks at the last step."""
    G = o.graph
    ell = len(mu)
    if S.length != ell + 1 or len(S.steps) != G.n:
        return False
    dec = _cached_decomposition(o)
    level = [dec.level_of(v) for v in G.vertices]
    for v in G.vertices:
        for i in range(1, ell + 1):
            want = G.omega[v] if level[v] == i else frozenset()
            if S.steps[v][i - 1] != want:
                return False
        if bool(S.steps[v][ell]) != (level[v] == ell + 1):
            return False
    return True


def enumerate_admissible(o: Orientation, seq: Sequence[int]) -> Iterator[StepWeightMap]:
    """All admissible ``len(seq)``-step maps with weight sequence ``seq``,
    built from explicit label subsets."""
    G = o.graph
    L = len(seq)

    def steps_from(i: int, present: frozenset[int], omega: tuple[frozenset[int], ...]):
        if i == L:
            yield ()
            return
        sinks = sorted(o.sinks(present))
        for choice in _sink_choices(sinks, omega, seq[i]):
            new_omega = tuple(om - choice.get(v, frozenset()) for v, om in enumerate(omega))
            new_present = frozenset(v for v in present if new_omega[v])
            for rest in steps_from(i + 1, new_present, new_omega):
                yield (choice,) + rest

    for chosen in steps_from(0, frozenset(G.vertices), G.omega):
        yield StepWeightMap(tuple(tuple(step.get(v, frozenset()) for step in chosen) for v in G.vertices))


def _sink_choices(sinks: list[int], omega, target: int) -> Iterator[dict[int, frozenset[int]]]:
    if not sinks:
        if target == 0:
            yield {}
        return
    v, rest = sinks[0], sinks[1:]
    labels = sorted(omega[v])
    for k in range(1, min(len(labels), target - len(rest)) + 1):
        for sub in combinations(labels, k):
            for tail in _sink_choices(rest, omega, target - k):
                yield {v: frozenset(sub), **tail}


def count_admissible(o: Orientation, seq: Sequence[int]) -> int:
    """Number of admissible maps with weight sequence ``seq``.

    Admissibility only sees which vertices have been emptied, so a map is
    determined up to ``Π C(|ω_{i-1}(v)|, |S(v)_i|)`` choices by its table
    of subset sizes."""
    return _count_profiles(o, tuple(seq), 0, tuple(o.graph.weights))


@lru_cache(maxsize=1 << 16)
def _count_profiles(o: Orientation, seq: tuple[int, ...], i: int, remaining: tuple[int, ...]) -> int:
    if i == len(seq):
        return 1
    present = frozenset(v for v, r in enumerate(remaining) if r)
    sinks = sorted(o.sinks(present))
    total = 0
    for sizes in _size_splits([remaining[v] for v in sinks], seq[i]):
        ways = 1
        rem = list(remaining)
        for v, k in zip(sinks, sizes):
            ways *= comb(rem[v], k)
            rem[v] -= k
        total += ways * _count_profiles(o, seq, i + 1, tuple(rem))
    return total


def _size_splits(caps: list[int], target: int) -> Iterator[tuple[int, ...]]:
    """Tuples ``1 ≤ k_i ≤ caps[i]`` summing to ``target``."""
    if not caps:
        if target == 0:
            yield ()
        return
    rest_min = len(caps) - 1
    rest_max = sum(caps[1:])
    for k in range(max(1, target - rest_max), min(caps[0], target - rest_min) + 1):
        for tail in _size_splits(caps[1:], target - k):
            yield (k,) + tail


def _check_theorem_range(G: SetWeightedGraph, r: int, j: int):
    d = G.total_weight
    if j < 0 or r + j > d:
        raise ValueError(f"need 0 ≤ j ≤ d − |μ|, got |μ| = {r}, j = {j}, d = {d}")
    if j == 0 and r != d:
        raise ValueError("j = 0 is only allowed when |μ| = d")


def theorem_rhs(G: SetWeightedGraph, mu: Sequence[int], j: int, engine: str = "profile") -> int:
    """``(−1)^{d−n} Σ_{(γ,S)} (−1)^{|(μ,j)| − Σ_{i≤ℓ+1} sink_i(γ)}`` over acyclic
    ``γ`` and admissible ``(ℓ+1)``-step maps with weight sequence ``(μ, j)``.

    ``engine`` is ``"profile"`` (size counting) or ``"explicit"``.
    """
    mu = Partition(mu)
    _check_theorem_range(G, mu.size, j)
    seq = tuple(mu) + (j,)
    L = len(seq)
    total = 0
    for o in acyclic_orientations(G):
        dec = _cached_decomposition(o)
        if engine == "profile":
            n_maps = count_admissible(o, seq)
        elif engine == "explicit":
            n_maps = sum(1 for _ in enumerate_admissible(o, seq))
        else:
            raise ValueError(f"unknown engine {engine!r}")
        if n_maps:
            sinks_used = sum(dec.count(i) for i in range(1, L + 1))
            total += _sign(mu.size + j - sinks_used) * n_maps
    return _sign(G.total_weight - G.n) * total


def one_level_rhs(G: SetWeightedGraph, j: int) -> int:
    """``(−1)^{d−n} Σ (−1)^{j − sink_1(γ)}`` over one-step admissible maps of
    weight ``j``: each first-level sink keeps a nonempty label subset."""
    if not 1 <= j <= G.total_weight:
        raise ValueError(f"need 1 ≤ j ≤ d, got j = {j}")
    total = 0
    for o in acyclic_orientations(G):
        sinks = o.sinks()
        # coefficient of x^j in Π_v ((1 + x)^{w(v)} − 1)
        poly = {0: 1}
        for v in sinks:
            w = G.weight(v)
            nxt: dict[int, int] = defaultdict(int)
            for deg, c in poly.items():
                for k in range(1, w + 1):
                    nxt[deg + k] += c * comb(w, k)
            poly = nxt
        total += _sign(j - len(sinks)) * poly.get(j, 0)
    return _sign(G.total_weight - G.n) * total


# --------------------------------------------------------------------------
# generalized 2-step maps

@dataclass(frozen=True)
class GeneralizedWeightMap:
    """``assignments[A] = (S(A)_1, S(A)_2)`` for the vertex sets ``A`` that
    carry anything; every other ``A`` is empty at both steps."""

    assignments: Mapping[frozenset[int], tuple[frozenset[int], frozenset[int]]]
    annihilated: frozenset[int] = frozenset()
    uncovered: frozenset[int] = frozenset()
    chosen: tuple[frozenset[int], ...] = ()

    def wts(self) -> tuple[int, int]:
        return (
            sum(len(s1) for s1, _ in self.assignments.values()),
            sum(len(s2) for _, s2 in self.assignments.values()),
        )

    def sgn(self) -> int:
        """``(−1)^{Σ_A |S(A)_{i_A}| − |A|}`` with ``i_A`` the first nonempty step of ``A``."""
        e = 0
        for A, (s1, s2) in self.assignments.items():
            first = s1 if s1 else s2
            if first:
                e += len(first) - len(A)
        return _sign(e)


def cycle_sinks(labels: frozenset[int], removed: frozenset[int]) -> frozenset[int]:
    """Sinks of the directed label cycle ``x_1 → x_2 → ... → x_w → x_1``
    (labels in increasing order) after deleting ``removed``."""
    order = sorted(labels)
    w = len(order)
    return frozenset(
        x for i, x in enumerate(order) if x not in removed and order[(i + 1) % w] in removed
    )


def uncovered_sinks(o: Orientation, annihilated: frozenset[int]) -> frozenset[int]:
    """Second-level sinks exposed once the annihilated first-level sinks are gone."""
    G = o.graph
    first = o.sinks()
    return o.sinks(set(G.vertices) - annihilated) - first


def _annihilated_neighbors(G: SetWeightedGraph, B: frozenset[int], D_comp: frozenset[int]) -> frozenset[int]:
    return frozenset(v for v in D_comp if G.adjacency[v] & B)


def truncated_pool(G: SetWeightedGraph, B: frozenset[int], D_B: frozenset[int]) -> tuple[int, ...]:
    """``ω(B)``, or its ``w(D_B)`` smallest labels when ``w(B) > w(D_B)``."""
    labels = sorted(x for v in B for x in G.omega[v])
    cap = G.weight_of(D_B)
    return tuple(labels[:cap]) if len(labels) > cap else tuple(labels)


def _active_components(G: SetWeightedGraph, D: frozenset[int], uncovered: frozenset[int]):
    """Components of ``G[D ∪ uncovered]`` that contain an uncovered vertex,
    as ``(D ∩ M, uncovered ∩ M)``.  Components made only of annihilated
    vertices impose no second-step requirement."""
    out = []
    for M in components(G, D | uncovered):
        if M & uncovered:
            out.append((M & D, M & uncovered))
    return out


def _check_conjecture_range(G: SetWeightedGraph, mu: int, j: int):
    d = G.total_weight
    if not 1 <= mu <= d:
        raise ValueError(f"need 1 ≤ μ ≤ d, got μ = {mu}, d = {d}")
    if j < 0 or j > d - mu:
        raise ValueError(f"need 0 ≤ j ≤ d − μ, got j = {j}")
    if j == 0 and mu != d:
        raise ValueError("j = 0 is only allowed when μ = d")


def enumerate_generalized(o: Orientation, mu: int, j: int) -> Iterator[GeneralizedWeightMap]:
    """Every admissible generalized 2-step map with weight sequence ``(μ, j)``,
    built from explicit label subsets at both steps."""
    G = o.graph
    sinks = sorted(o.sinks())
    per_sink = [list(_nonempty_subsets(sorted(G.omega[v]))) for v in sinks]
    for firsts in product(*per_sink):
        if sum(map(len, firsts)) != mu:
            continue
        s1 = {v: frozenset(f) for v, f in zip(sinks, firsts)}
        D = frozenset(v for v in sinks if s1[v] == G.omega[v])
        base: dict[frozenset[int], tuple[frozenset[int], frozenset[int]]] = {}
        for v in sinks:
            second = frozenset() if v in D else cycle_sinks(G.omega[v], s1[v])
            base[frozenset((v,))] = (s1[v], second)
        level_two = sum(len(s2) for _, s2 in base.values())
        if level_two > j:
            continue
        unc = uncovered_sinks(o, D)
        options = []
        for D_M, U_M in _active_components(G, D, unc):
            opts = []
            for B in _nonempty_subsets(sorted(U_M)):
                B = frozenset(B)
                pool = truncated_pool(G, B, _annihilated_neighbors(G, B, D_M))
                for S2 in _nonempty_subsets(pool):
                    opts.append((B, frozenset(S2)))
            options.append(opts)
        for picks in product(*options):
            if level_two + sum(len(s2) for _, s2 in picks) != j:
                continue
            assignments = dict(base)
            for B, S2 in picks:
                prev1, prev2 = assignments.get(B, (frozenset(), frozenset()))
                assignments[B] = (prev1, prev2 | S2)
            yield GeneralizedWeightMap(assignments, D, unc, tuple(B for B, _ in picks))


@lru_cache(maxsize=None)
def _cycle_run_table(w: int) -> dict[int, Counter]:
    """``table[k][r]``: number of ``k``-subsets of the ``w`` labels (as cycle
    positions) whose removal leaves ``r`` sinks in the label cycle,
    tallied by explicit enumeration."""
    labels = frozenset(range(w))
    table: dict[int, Counter] = defaultdict(Counter)
    for k in range(1, w + 1):
        for sub in combinations(range(w), k):
            table[k][len(cycle_sinks(labels, frozenset(sub)))] += 1
    return dict(table)


@dataclass
class Contribution:
    """Signed total and number of maps for one orientation, one choice of
    first-step sizes and one choice of the sets ``B_i``."""

    orientation: Orientation
    first_sizes: dict[int, int]
    annihilated: frozenset[int]
    chosen: tuple[frozenset[int], ...]
    signed: dict[int, int] = field(default_factory=dict)
    maps: dict[int, int] = field(default_factory=dict)

    def to_json(self, j: int) -> dict:
        ids = self.orientation.graph.ids
        return {
            "orientation": self.orientation.to_json(),
            "sinks": [ids[v] for v in sorted(self.orientation.sinks())],
            "first_sizes": {ids[v]: k for v, k in sorted(self.first_sizes.items())},
            "annihilated": [ids[v] for v in sorted(self.annihilated)],
            "chosen": [[ids[v] for v in sorted(B)] for B in self.chosen],
            "maps": self.maps.get(j, 0),
            "signed": self.signed.get(j, 0),
        }


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for i, x in a.items():
        for k, y in b.items():
            out[i + k] += x * y
    return dict(out)


def conjecture_contributions(G: SetWeightedGraph, mu: int, sink_rule: str = "equal") -> list[Contribution]:
    """All contributions with first-step weight ``mu``, carrying their
    second-step weight as a polynomial so every ``j`` is available at once.

    First-step label subsets are tallied explicitly (the sinks of a label
    cycle depend on the arrangement of the removed labels), second-step
    subsets of a pool of size ``t`` by ``C(t, s)``.

    ``sink_rule="equal"`` makes a partially used sink take all the sinks of
    its label cycle at step two; ``"subset"`` lets it take any subset of
    them.  Only the first is the conjectured rule; the second exists so the
    two readings can be compared."""
    if sink_rule not in ("equal", "subset"):
        raise ValueError(f"unknown sink rule {sink_rule!r}")
    out = []
    for o in acyclic_orientations(G):
        sinks = sorted(o.sinks())
        caps = [G.weight(v) for v in sinks]
        for sizes in _size_splits(caps, mu):
            first = dict(zip(sinks, sizes))
            D = frozenset(v for v in sinks if first[v] == G.weight(v))
            first_sign = _sign(sum(k - 1 for k in sizes))
            level_one_maps = {0: 1}
            for v in sinks:
                if v not in D:
                    runs = _cycle_run_table(G.weight(v))[first[v]]
                    if sink_rule == "subset":
                        runs = _subsets_of_runs(runs)
                    level_one_maps = _poly_mul(level_one_maps, dict(runs))
            unc = uncovered_sinks(o, D)
            comp_options = []
            for D_M, U_M in _active_components(G, D, unc):
                opts = []
                for B in _nonempty_subsets(sorted(U_M)):
                    B = frozenset(B)
                    t = len(truncated_pool(G, B, _annihilated_neighbors(G, B, D_M)))
                    counts = {s: comb(t, s) for s in range(1, t + 1)}
                    signed = {s: _sign(s - len(B)) * c for s, c in counts.items()}
                    opts.append((B, counts, signed))
                comp_options.append(opts)
            for picks in product(*comp_options):
                maps = dict(level_one_maps)
                signed = {k: first_sign * v for k, v in level_one_maps.items()}
                for _, counts, sgn_counts in picks:
                    maps = _poly_mul(maps, counts)
                    signed = _poly_mul(signed, sgn_counts)
                out.append(Contribution(o, first, D, tuple(B for B, _, _ in picks),
                                        {k: v for k, v in signed.items() if v},
                                        {k: v for k, v in maps.items() if v}))
    return out


def _subsets_of_runs(runs: Counter) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for r, c in runs.items():
        for s in range(r + 1):
            out[s] += c * comb(r, s)
    return out


@lru_cache(maxsize=4096)
def _conjecture_totals(G: SetWeightedGraph, mu: int, sink_rule: str = "equal") -> dict[int, int]:
    totals: dict[int, int] = defaultdict(int)
    for c in conjecture_contributions(G, mu, sink_rule):
        for k, v in c.signed.items():
            totals[k] += v
    return dict(totals)


def conjecture_rhs(G: SetWeightedGraph, mu: int, j: int, engine: str = "count",
                   sink_rule: str = "equal") -> int:
    """``(−1)^{d−n} Σ sgn(γ, S)`` over acyclic ``γ`` and admissible
    generalized 2-step maps with weight sequence ``(μ, j)``.

    ``engine`` is ``"count"`` or ``"explicit"`` (the latter only supports
    the default ``sink_rule``)."""
    _check_conjecture_range(G, mu, j)
    if engine == "count":
        total = _conjecture_totals(G, mu, sink_rule).get(j, 0)
    elif engine == "explicit":
        if sink_rule != "equal":
            raise ValueError("the explicit engine implements the 'equal' sink rule only")
        total = sum(S.sgn() for o in acyclic_orientations(G) for S in enumerate_generalized(o, mu, j))
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return _sign(G.total_weight - G.n) * total


def conjecture_breakdown(G: SetWeightedGraph, mu: int, j: int) -> list[Contribution]:
    """The nonzero contributions to :func:`conjecture_rhs` at ``(μ, j)``
    (before the global sign ``(−1)^{d−n}``)."""
    _check_conjecture_range(G, mu, j)
    return [c for c in conjecture_contributions(G, mu) if c.maps.get(j)]
