import itertools
from collections import Counter
from math import comb

import pytest

from chromsink.orientations import acyclic_orientations, sink_decomposition
from chromsink.partitions import partitions_of
from chromsink.swgraph import SetWeightedGraph, csf_e, is_maximal, max_stable_weight
from chromsink.symfunc import sigma
from chromsink.weightmaps import (
    GeneralizedWeightMap,
    StepWeightMap,
    conjecture_breakdown,
    conjecture_contributions,
    conjecture_rhs,
    count_admissible,
    cycle_sinks,
    enumerate_admissible,
    enumerate_generalized,
    is_admissible,
    one_level_rhs,
    standard_form_check,
    theorem_rhs,
    truncated_pool,
)
from zoo import complete, p575, seeded_graphs


def all_step_maps(G, seq):
    """Every step map with weight sequence ``seq``: each label goes to one
    step or stays unused."""
    labels = [(v, x) for v in G.vertices for x in sorted(G.omega[v])]
    L = len(seq)
    for assign in itertools.product(range(L + 1), repeat=len(labels)):
        counts = Counter(assign)
        if any(counts[i + 1] != seq[i] for i in range(L)):
            continue
        steps = [[set() for _ in range(L)] for _ in G.vertices]
        for (v, x), a in zip(labels, assign):
            if a:
                steps[v][a - 1].add(x)
        yield StepWeightMap(tuple(tuple(frozenset(s) for s in st) for st in steps))


def theorem_sequences(G):
    d = G.total_weight
    for r in range(0, d + 1):
        for mu in partitions_of(r):
            for j in range(0 if r == d else 1, d - r + 1):
                yield mu, j


# --------------------------------------------------------------------------
# step maps

def test_admissible_examples():
    G = p575()
    o = next(o for o in acyclic_orientations(G) if o.sinks() == {1})
    full = frozenset(range(6, 13))
    S = StepWeightMap(((frozenset(), frozenset({1})), (full, frozenset()), (frozenset(), frozenset({13}))))
    assert is_admissible(o, S)
    assert standard_form_check(o, S, (7,))
    split = StepWeightMap(((frozenset(), frozenset()), (frozenset({6}), frozenset({7})), (frozenset(), frozenset())))
    assert is_admissible(o, split)
    assert not standard_form_check(o, split, (1,))
    # v1 still points at the partly used v2, so it is no sink at step two
    early = StepWeightMap(((frozenset(), frozenset({1})), (frozenset({6}), frozenset()), (frozenset(), frozenset())))
    assert not is_admissible(o, early)
    bad = StepWeightMap(((frozenset({1}), frozenset()), (full, frozenset()), (frozenset(), frozenset())))
    assert not is_admissible(o, bad)
    assert not standard_form_check(o, bad, (8,))


def test_explicit_enumerator_finds_exactly_the_admissible_maps():
    for G in seeded_graphs(seed=31, count=25, max_vertices=3, max_weight=2):
        if G.total_weight > 6:
            continue
        for mu, j in theorem_sequences(G):
            seq = tuple(mu) + (j,)
            if len(seq) > 3:
                continue
            for o in acyclic_orientations(G):
                brute = {S for S in all_step_maps(G, seq) if is_admissible(o, S)}
                found = list(enumerate_admissible(o, seq))
                assert len(found) == len(set(found))
                assert set(found) == brute


def test_standard_form_equivalence_under_maximal_mu():
    checked = 0
    for G in seeded_graphs(seed=32, count=60, max_vertices=4, max_weight=3):
        for mu, j in theorem_sequences(G):
            if not is_maximal(G, mu):
                continue
            seq = tuple(mu) + (j,)
            for o in acyclic_orientations(G):
                dec = sink_decomposition(o)
                admissible = list(enumerate_admissible(o, seq))
                for S in admissible:
                    assert standard_form_check(o, S, mu)
                # standard-form maps counted directly from the sink levels
                ell = len(mu)
                if tuple(dec.type_seq[:ell]) == tuple(mu) and len(dec.type_seq) > ell:
                    top = [G.weight(v) for v in dec.levels[ell]]
                    poly = {0: 1}
                    for w in top:
                        poly = _grow(poly, w)
                    standard = poly.get(j, 0)
                elif tuple(dec.type_seq) == tuple(mu):
                    standard = 1 if j == 0 else 0
                else:
                    standard = 0
                assert len(admissible) == standard
                checked += 1
    assert checked > 500


def _grow(poly, w):
    out = Counter()
    for a, c in poly.items():
        for k in range(1, w + 1):
            out[a + k] += c * comb(w, k)
    return dict(out)


def test_standard_form_equivalence_brute_force_small():
    for G in seeded_graphs(seed=33, count=40, max_vertices=3, max_weight=2):
        if G.total_weight > 5:
            continue
        for mu, j in theorem_sequences(G):
            if not mu or not is_maximal(G, mu) or len(mu) > 2:
                continue
            seq = tuple(mu) + (j,)
            for o in acyclic_orientations(G):
                for S in all_step_maps(G, seq):
                    assert is_admissible(o, S) == standard_form_check(o, S, mu)


def test_unique_map_when_mu_matches_type():
    for G in seeded_graphs(seed=34, count=60, max_vertices=4, max_weight=3):
        for o in acyclic_orientations(G):
            t = sink_decomposition(o).type_seq
            for ell in range(1, len(t) + 1):
                maps = list(enumerate_admissible(o, t[:ell]))
                assert len(maps) == 1
                (S,) = maps
                dec = sink_decomposition(o)
                for v in G.vertices:
                    for i in range(ell):
                        want = G.omega[v] if v in dec.levels[i] else frozenset()
                        assert S.steps[v][i] == want


def test_no_map_when_a_prefix_exceeds_type():
    checked = 0
    for G in seeded_graphs(seed=35, count=60, max_vertices=4, max_weight=3):
        for o in acyclic_orientations(G):
            t = sink_decomposition(o).type_seq
            for r in range(1, G.total_weight + 1):
                for mu in partitions_of(r):
                    if len(mu) > 3:
                        continue
                    if any(sum(mu[: i + 1]) > sum(t[: i + 1]) for i in range(len(mu))):
                        assert count_admissible(o, mu) == 0
                        assert not any(True for _ in enumerate_admissible(o, mu))
                        checked += 1
    assert checked > 100


def test_profile_counter_matches_explicit_enumerator():
    for G in seeded_graphs(seed=36, count=80, max_vertices=4, max_weight=3):
        if G.total_weight > 8:
            continue
        for mu, j in theorem_sequences(G):
            assert theorem_rhs(G, mu, j, "profile") == theorem_rhs(G, mu, j, "explicit")


def test_theorem_rhs_examples():
    K3 = complete(3)
    assert theorem_rhs(K3, (1, 1), 1) == 6 == sigma(csf_e(K3), (1, 1), 1)
    for a in range(1, 6):
        assert theorem_rhs(SetWeightedGraph.from_weights([a]), (a,), 0) == 1
    G = p575()
    assert max_stable_weight(G) == 10
    assert theorem_rhs(G, (10,), 2) == sigma(csf_e(G), (10,), 2)
    with pytest.raises(ValueError):
        theorem_rhs(G, (10,), 8)
    with pytest.raises(ValueError):
        theorem_rhs(G, (10,), 0)


def test_one_level_examples():
    for a in range(1, 7):
        G = SetWeightedGraph.from_weights([a])
        for j in range(1, a + 1):
            assert one_level_rhs(G, j) == (-1) ** (a - 1) * (-1) ** (j - 1) * comb(a, j)
    assert one_level_rhs(complete(3), 1) == 6
    assert one_level_rhs(p575(), 17) == sigma(csf_e(p575()), (), 17)
    with pytest.raises(ValueError):
        one_level_rhs(p575(), 0)


def test_one_level_matches_one_step_theorem_side():
    for G in seeded_graphs(seed=37, count=40, max_vertices=4, max_weight=3):
        for j in range(1, G.total_weight + 1):
            assert one_level_rhs(G, j) == theorem_rhs(G, (), j)


# --------------------------------------------------------------------------
# generalized maps

def test_cycle_sinks():
    labels = frozenset(range(1, 8))
    assert cycle_sinks(labels, frozenset({1, 2, 3})) == {7}
    assert cycle_sinks(labels, frozenset({2, 5})) == {1, 4}
    assert cycle_sinks(labels, labels) == frozenset()
    assert cycle_sinks(frozenset({4}), frozenset()) == frozenset()


def test_truncated_pool():
    G = p575()
    assert truncated_pool(G, frozenset({1}), frozenset({0})) == (6, 7, 8, 9, 10)
    assert truncated_pool(G, frozenset({1}), frozenset({0, 2})) == tuple(range(6, 13))


def test_generalized_sign():
    S = GeneralizedWeightMap({frozenset({0}): (frozenset({1, 2}), frozenset({5})),
                              frozenset({1, 2}): (frozenset(), frozenset({7}))})
    assert S.wts() == (2, 2)
    assert S.sgn() == (-1) ** ((2 - 1) + (1 - 2))


def test_p575_worked_example():
    G = p575()
    assert conjecture_rhs(G, 7, 3) == -65
    assert conjecture_rhs(G, 7, 3, engine="explicit") == -65
    by_orientation = Counter()
    middle = {}
    for c in conjecture_breakdown(G, 7, 3):
        sinks = frozenset(c.orientation.sinks())
        by_orientation[sinks] += c.signed[3]
        if sinks == {1}:
            middle[frozenset().union(*c.chosen)] = (c.signed[3], c.maps[3])
    assert by_orientation[frozenset({0, 2})] == -50
    assert by_orientation[frozenset({1})] == -15
    assert middle[frozenset({0})] == (10, 10)
    assert middle[frozenset({2})] == (10, 10)
    assert middle[frozenset({0, 2})] == (-35, 35)
    two_sink = sorted((tuple(sorted(c.first_sizes.values())), c.signed[3])
                      for c in conjecture_breakdown(G, 7, 3) if len(c.first_sizes) == 2)
    assert two_sink == [((3, 4), -25), ((3, 4), -25)]


def test_single_vertex_full_weight():
    for a in range(1, 7):
        assert conjecture_rhs(SetWeightedGraph.from_weights([a]), a, 0) == 1


def test_conjecture_range_checks():
    with pytest.raises(ValueError):
        conjecture_rhs(p575(), 0, 1)
    with pytest.raises(ValueError):
        conjecture_rhs(p575(), 7, 11)
    with pytest.raises(ValueError):
        conjecture_rhs(p575(), 7, 0)


def test_count_engine_matches_explicit_engine():
    for G in seeded_graphs(seed=38, count=80, max_vertices=4, max_weight=3):
        if G.total_weight > 9:
            continue
        d = G.total_weight
        for mu in range(1, d + 1):
            for j in range(0 if mu == d else 1, d - mu + 1):
                assert conjecture_rhs(G, mu, j) == conjecture_rhs(G, mu, j, engine="explicit"), (G, mu, j)


def test_explicit_maps_satisfy_the_admissibility_clauses():
    for G in seeded_graphs(seed=39, count=30, max_vertices=4, max_weight=3):
        d = G.total_weight
        for o in acyclic_orientations(G):
            first = o.sinks()
            for mu in range(1, d + 1):
                for j in range(0 if mu == d else 1, d - mu + 1):
                    for S in enumerate_generalized(o, mu, j):
                        assert S.wts() == (mu, j)
                        for A, (s1, s2) in S.assignments.items():
                            assert s1 | s2 <= frozenset().union(*(G.omega[v] for v in A))
                            assert not s1 & s2
                            if s1:
                                (v,) = A
                                assert v in first
                        for v in first:
                            s1, s2 = S.assignments[frozenset({v})]
                            assert s1
                            if s1 != G.omega[v]:
                                assert s2 == cycle_sinks(G.omega[v], s1)


def test_conjecture_agrees_with_theorem_for_maximal_single_parts():
    checked = 0
    for G in seeded_graphs(seed=40, count=80, max_vertices=4, max_weight=3):
        d = G.total_weight
        for mu in range(1, d + 1):
            if not is_maximal(G, (mu,)):
                continue
            for j in range(0 if mu == d else 1, d - mu + 1):
                assert conjecture_rhs(G, mu, j) == theorem_rhs(G, (mu,), j), (G, mu, j)
                checked += 1
    assert checked > 100


def test_equal_rule_is_the_default():
    G = p575()
    assert conjecture_rhs(G, 7, 3, sink_rule="equal") == conjecture_rhs(G, 7, 3)
    assert len(conjecture_contributions(G, 7, "subset")) == len(conjecture_contributions(G, 7))
    with pytest.raises(ValueError):
        conjecture_rhs(G, 7, 3, sink_rule="superset")
