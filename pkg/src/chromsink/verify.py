"""Both-sides verification of the sink-sequence identities, and a seeded
random-graph fuzzer.

The left side always comes from the symmetric-function pipeline
(``csf_p -> p_to_e -> sigma``); the right side from enumerating
orientations and weight maps.  The two paths share only the graph type.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .necklaces import one_edge_piecewise
from .orientations import count_by_sink_count
from .partitions import Partition, format_partition, partitions_of
from .swgraph import SetWeightedGraph, csf_e, is_maximal, s_allowability_violation
from .symfunc import sigma
from .weightmaps import conjecture_breakdown, conjecture_rhs, one_level_rhs, theorem_rhs

PASS, FAIL, UNMET = "pass", "fail", "precondition-unmet"

STATEMENTS = ("stanley", "main", "one-level", "no-edge", "one-edge", "conjecture")


@dataclass
class VerificationReport:
    statement: str
    graph: SetWeightedGraph
    mu: Partition | None
    j: int | None
    lhs: Any = None
    rhs: Any = None
    status: str = UNMET
    millis: int = 0
    reason: str | None = None
    breakdown: list[dict] | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {
            "statement": self.statement,
            "graph": self.graph.to_json(),
            "mu": None if self.mu is None else format_partition(self.mu),
            "j": self.j,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "status": self.status,
            "millis": self.millis,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.breakdown is not None:
            out["breakdown"] = self.breakdown
        return out

    def describe(self) -> str:
        mu = "" if self.mu is None else f" mu={format_partition(self.mu) or '∅'}"
        j = "" if self.j is None else f" j={self.j}"
        line = f"[{self.status}] {self.statement}{mu}{j}"
        if self.status != UNMET:
            line += f": lhs={_jsonable(self.lhs)} rhs={_jsonable(self.rhs)}"
        elif self.reason:
            line += f": {self.reason}"
        return line


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): str(v) for k, v in x.items()}
    return None if x is None else str(x)


def _finish(report: VerificationReport, start: float) -> VerificationReport:
    report.status = PASS if report.lhs == report.rhs else FAIL
    report.millis = int((time.perf_counter() - start) * 1000)
    return report


def _unmet(statement, G, mu, j, reason) -> VerificationReport:
    return VerificationReport(statement, G, mu, j, reason=reason)


def _range_problem(d: int, r: int, j: int) -> str | None:
    if j < 0 or r + j > d:
        return f"need 0 ≤ j ≤ d − |μ| = {d - r}"
    if j == 0 and r != d:
        return "j = 0 requires |μ| = d"
    return None


# --------------------------------------------------------------------------
# single statements

def verify_stanley_sinks(G: SetWeightedGraph) -> VerificationReport:
    """For every ``k``: ``Σ_{l(λ)=k} c_λ`` against the number of acyclic
    orientations with ``k`` sinks."""
    if not G.is_unweighted():
        return _unmet("stanley", G, None, None, "graph has a vertex of weight > 1")
    start = time.perf_counter()
    E = csf_e(G)
    lhs: dict[int, int] = {}
    for lam, c in E.coeffs.items():
        lhs[len(lam)] = lhs.get(len(lam), 0) + c
    lhs = {k: v for k, v in sorted(lhs.items()) if v}
    rhs = count_by_sink_count(G)
    return _finish(VerificationReport("stanley", G, None, None, lhs, rhs), start)


def verify_main_theorem(G: SetWeightedGraph, mu: Sequence[int], j: int) -> VerificationReport:
    mu = Partition(mu)
    d = G.total_weight
    problem = _range_problem(d, mu.size, j)
    if problem:
        return _unmet("main", G, mu, j, problem)
    if not is_maximal(G, mu):
        return _unmet("main", G, mu, j, "μ is not maximal")
    start = time.perf_counter()
    lhs = sigma(csf_e(G), tuple(mu), j)
    rhs = theorem_rhs(G, mu, j)
    return _finish(VerificationReport("main", G, mu, j, lhs, rhs), start)


def verify_one_level(G: SetWeightedGraph, j: int) -> VerificationReport:
    if not 1 <= j <= G.total_weight:
        return _unmet("one-level", G, Partition(), j, f"need 1 ≤ j ≤ d = {G.total_weight}")
    start = time.perf_counter()
    lhs = sigma(csf_e(G), (), j)
    rhs = one_level_rhs(G, j)
    return _finish(VerificationReport("one-level", G, Partition(), j, lhs, rhs), start)


def _conjecture_range_problem(G: SetWeightedGraph, mu: int, j: int) -> str | None:
    d = G.total_weight
    if not 1 <= mu <= d:
        return f"need 1 ≤ μ ≤ d = {d}"
    return _range_problem(d, mu, j)


def verify_no_edge(G: SetWeightedGraph, mu: int, j: int) -> VerificationReport:
    if G.edges:
        return _unmet("no-edge", G, Partition((mu,)), j, "graph has edges")
    problem = _conjecture_range_problem(G, mu, j)
    if problem:
        return _unmet("no-edge", G, Partition((mu,)), j, problem)
    start = time.perf_counter()
    lhs = sigma(csf_e(G), (mu,), j)
    rhs = conjecture_rhs(G, mu, j)
    return _finish(VerificationReport("no-edge", G, Partition((mu,)), j, lhs, rhs), start)


def verify_one_edge_graph(G: SetWeightedGraph, mu: int, j: int) -> VerificationReport:
    """Two vertices joined by one edge, ``μ ≤ a`` or ``b ≤ μ ≤ a + b``.

    Besides comparing the two sides, the closed piecewise value is checked
    against the left side; a mismatch there marks the report failed too."""
    pm = Partition((mu,))
    if G.n != 2 or len(G.edges) != 1 or G.has_loop:
        return _unmet("one-edge", G, pm, j, "graph is not two vertices joined by one edge")
    a, b = sorted(G.weights)
    if not (1 <= mu <= a or b <= mu <= a + b):
        return _unmet("one-edge", G, pm, j, f"μ = {mu} lies strictly between {a} and {b}")
    problem = _conjecture_range_problem(G, mu, j)
    if problem:
        return _unmet("one-edge", G, pm, j, problem)
    start = time.perf_counter()
    lhs = sigma(csf_e(G), (mu,), j)
    rhs = conjecture_rhs(G, mu, j)
    report = _finish(VerificationReport("one-edge", G, pm, j, lhs, rhs), start)
    closed = (-1) ** (a + b + mu) * one_edge_piecewise(a, b, mu, j)
    if closed != lhs:
        report.status = FAIL
        report.reason = f"closed form gives {closed}"
    return report


def verify_conjecture(G: SetWeightedGraph, mu: int, j: int) -> VerificationReport:
    """A failure carries the full per-orientation breakdown of the right side."""
    pm = Partition((mu,))
    problem = _conjecture_range_problem(G, mu, j)
    if problem:
        return _unmet("conjecture", G, pm, j, problem)
    witness = s_allowability_violation(G, mu)
    if witness is not None:
        pair, i, part = witness
        ids = G.ids
        s_i, t_i = pair.components[i]
        return _unmet(
            "conjecture", G, pm, j,
            f"μ is not s-allowable: part {part} falls strictly between w({[ids[v] for v in sorted(s_i)]})"
            f" and w({[ids[v] for v in sorted(t_i)]})",
        )
    start = time.perf_counter()
    lhs = sigma(csf_e(G), (mu,), j)
    rhs = conjecture_rhs(G, mu, j)
    report = _finish(VerificationReport("conjecture", G, pm, j, lhs, rhs), start)
    if report.status == FAIL:
        report.reason = "potential counterexample"
        report.breakdown = [c.to_json(j) for c in conjecture_breakdown(G, mu, j)]
    return report


# --------------------------------------------------------------------------
# sweeps

def sweep(statement: str, G: SetWeightedGraph) -> Iterator[VerificationReport]:
    """Every ``(μ, j)`` the statement could apply to on ``G``, in a fixed order;
    instances outside its hypotheses come back as precondition-unmet."""
    d = G.total_weight
    if statement == "stanley":
        yield verify_stanley_sinks(G)
    elif statement == "main":
        for r in range(d + 1):
            for mu in partitions_of(r):
                for j in range(0 if r == d else 1, d - r + 1):
                    yield verify_main_theorem(G, mu, j)
    elif statement == "one-level":
        for j in range(1, d + 1):
            yield verify_one_level(G, j)
    elif statement in ("no-edge", "one-edge", "conjecture"):
        check = {"no-edge": verify_no_edge, "one-edge": verify_one_edge_graph,
                 "conjecture": verify_conjecture}[statement]
        for mu in range(1, d + 1):
            for j in range(0 if mu == d else 1, d - mu + 1):
                yield check(G, mu, j)
    else:
        raise ValueError(f"unknown statement {statement!r}; expected one of {STATEMENTS}")


@dataclass
class FuzzConfig:
    seed: int = 1
    trials: int = 50
    max_vertices: int = 4
    max_weight: int = 3
    edge_probability: Fraction = Fraction(1, 2)
    statement: str = "main"
    multi_edge_probability: Fraction = Fraction(1, 10)

    def __post_init__(self):
        self.edge_probability = Fraction(self.edge_probability)
        self.multi_edge_probability = Fraction(self.multi_edge_probability)
        if not 0 <= self.edge_probability <= 1:
            raise ValueError("edge probability must lie in [0, 1]")
        if self.trials < 0 or self.max_vertices < 1 or self.max_weight < 1:
            raise ValueError("trials ≥ 0, max_vertices ≥ 1 and max_weight ≥ 1 required")
        if self.statement not in STATEMENTS:
            raise ValueError(f"unknown statement {self.statement!r}")


def _bernoulli(rng: random.Random, p: Fraction) -> bool:
    return rng.randrange(p.denominator) < p.numerator


def random_graph(rng: random.Random, max_vertices: int, max_weight: int,
                 edge_probability: Fraction, multi_edge_probability: Fraction = Fraction(0)) -> SetWeightedGraph:
    """Erdős–Rényi skeleton with uniform weights in ``1..max_weight``.
    No loops; a present edge is doubled with ``multi_edge_probability``."""
    n = rng.randint(1, max_vertices)
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if _bernoulli(rng, edge_probability):
                edges.append((u, v))
                if _bernoulli(rng, multi_edge_probability):
                    edges.append((u, v))
    return SetWeightedGraph.from_weights(weights, edges)


def random_graphs(config: FuzzConfig) -> Iterator[SetWeightedGraph]:
    rng = random.Random(config.seed)
    max_weight = 1 if config.statement == "stanley" else config.max_weight
    for _ in range(config.trials):
        yield random_graph(rng, config.max_vertices, max_weight,
                           config.edge_probability, config.multi_edge_probability)


def fuzz(config: FuzzConfig) -> Iterator[VerificationReport]:
    for G in random_graphs(config):
        yield from sweep(config.statement, G)


@dataclass
class SweepSummary:
    passed: int = 0
    failed: int = 0
    unmet: int = 0
    failures: list[VerificationReport] = field(default_factory=list)

    def add(self, report: VerificationReport):
        if report.status == PASS:
            self.passed += 1
        elif report.status == FAIL:
            self.failed += 1
            self.failures.append(report)
        else:
            self.unmet += 1

    @classmethod
    def of(cls, reports) -> "SweepSummary":
        s = cls()
        for r in reports:
            s.add(r)
        return s
