"""Necklace counts ``|S_{a,μ,j}|``: size-``μ`` vertex subsets ``W`` of the
``a``-cycle whose removal leaves ``j`` components, and the identities they
satisfy.

Counting is by enumeration over bitmasks; no closed form is assumed.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterator

from .checks import CheckReport
from .symfunc import p_basis_elem, p_to_e, sigma


def remaining_components(a: int, chosen: int) -> int:
    """Components of ``C_a`` minus the vertices in bitmask ``chosen``
    (bit ``i`` is vertex ``i + 1``)."""
    full = (1 << a) - 1
    if chosen == full:
        return 0
    if chosen == 0:
        return 1
    # a component of the remainder ends at each unchosen vertex whose successor is chosen
    return sum(1 for i in range(a) if not chosen >> i & 1 and chosen >> ((i + 1) % a) & 1)


@lru_cache(maxsize=None)
def necklace_table(a: int) -> Counter:
    """``table[(μ, j)] = |S_{a,μ,j}|`` for every ``μ`` from ``0`` to ``a``.

    With ``W`` empty the cycle stays whole, so ``|S_{a,0,1}| = 1``."""
    if a < 1:
        raise ValueError("the cycle needs at least one vertex")
    table: Counter = Counter()
    for mask in range(1 << a):
        table[(bin(mask).count("1"), remaining_components(a, mask))] += 1
    return table


def count_necklace(a: int, mu: int, j: int) -> int:
    if a < 1 or mu < 0 or j < 0:
        raise ValueError(f"need a ≥ 1, μ ≥ 0, j ≥ 0; got {(a, mu, j)}")
    return necklace_table(a).get((mu, j), 0)


def signed_necklace(a: int, mu: int, j: int) -> int:
    """``T_{a,μ,j} = (−1)^{a+μ} |S_{a,μ,j}|``."""
    return (-1) ** (a + mu) * count_necklace(a, mu, j)


def enumerate_necklace(a: int, mu: int, j: int) -> Iterator[list[int]]:
    """The sets ``W`` themselves, as sorted 1-based vertex lists."""
    for mask in range(1 << a):
        if bin(mask).count("1") == mu and remaining_components(a, mask) == j:
            yield [i + 1 for i in range(a) if mask >> i & 1]


def verify_necklace_recurrence(a_max: int) -> CheckReport:
    """``|S_{a,μ,j}| = |S_{a−1,μ−1,j}| + Σ_{i=μ+j−2}^{a−2} |S_{i,μ−1,j−1}|``
    for ``3 ≤ a ≤ a_max``, ``μ ≥ 2``, ``j ≥ 1``."""
    if a_max < 3:
        raise ValueError("a_max must be at least 3")
    report = CheckReport("necklace recurrence")
    for a in range(3, a_max + 1):
        for mu in range(2, a + 1):
            for j in range(1, a + 1):
                lhs = count_necklace(a, mu, j)
                rhs = count_necklace(a - 1, mu - 1, j)
                rhs += sum(count_necklace(i, mu - 1, j - 1) for i in range(max(1, mu + j - 2), a - 1))
                report.record(lhs == rhs, a=a, mu=mu, j=j, lhs=lhs, rhs=rhs)
    return report


def verify_sigma_pa_identity(a_max: int) -> CheckReport:
    """``σ_{μ,j}(p_a) = (−1)^{a+μ} |S_{a,μ,j}|`` for ``a ≤ a_max`` and all
    ``1 ≤ μ ≤ a``, ``0 ≤ j ≤ a − μ`` (``j = 0`` only at ``μ = a``)."""
    if a_max < 1:
        raise ValueError("a_max must be positive")
    report = CheckReport("sigma(p_a) necklace identity")
    for a in range(1, a_max + 1):
        f = p_to_e(p_basis_elem((a,)))
        for mu in range(1, a + 1):
            for j in range(0, a - mu + 1):
                if j == 0 and mu != a:
                    continue
                lhs = sigma(f, (mu,), j)
                rhs = signed_necklace(a, mu, j)
                report.record(lhs == rhs, a=a, mu=mu, j=j, lhs=lhs, rhs=rhs)
    return report


def one_edge_convolution(a: int, b: int, mu: int, j: int) -> int:
    """``−|S_{a+b,μ,j}| + Σ_{k=1}^{μ−1} Σ_{ℓ=0}^{j} |S_{a,k,ℓ}| |S_{b,μ−k,j−ℓ}|``."""
    total = -count_necklace(a + b, mu, j)
    for k in range(1, mu):
        for l in range(0, j + 1):
            total += count_necklace(a, k, l) * count_necklace(b, mu - k, j - l)
    return total


def one_edge_piecewise(a: int, b: int, mu: int, j: int) -> int:
    _check_one_edge_range(a, b, mu, j)
    sign = (-1) ** j
    if mu == a == b:
        return sign * 2 * comb(a, j)
    if a < b and mu in (a, b):
        return sign * comb(a, j) - count_necklace(b, mu, j)
    return -count_necklace(a, mu, j) - count_necklace(b, mu, j)


def _check_one_edge_range(a: int, b: int, mu: int, j: int):
    if not 1 <= a <= b:
        raise ValueError(f"need 1 ≤ a ≤ b, got a = {a}, b = {b}")
    if not (1 <= mu <= a or b <= mu <= a + b):
        raise ValueError(f"μ = {mu} lies strictly between a = {a} and b = {b}")
    if not 0 <= j <= a + b - mu or (j == 0 and mu != a + b):
        raise ValueError(f"j = {j} out of range for μ = {mu}, a + b = {a + b}")


def verify_one_edge_lemma(a: int, b: int, mu: int, j: int) -> CheckReport:
    _check_one_edge_range(a, b, mu, j)
    report = CheckReport(f"one-edge necklace lemma a={a} b={b} μ={mu} j={j}")
    lhs, rhs = one_edge_convolution(a, b, mu, j), one_edge_piecewise(a, b, mu, j)
    report.record(lhs == rhs, a=a, b=b, mu=mu, j=j, lhs=lhs, rhs=rhs)
    return report


def one_edge_lemma_range(b_max: int) -> Iterator[tuple[int, int, int, int]]:
    """Every in-range ``(a, b, μ, j)`` with ``a ≤ b ≤ b_max``."""
    for b in range(1, b_max + 1):
        for a in range(1, b + 1):
            for mu in range(1, a + b + 1):
                if a < mu < b:
                    continue
                for j in range(0, a + b - mu + 1):
                    if j == 0 and mu != a + b:
                        continue
                    yield a, b, mu, j
