"""Exact sparse symmetric functions in the power-sum, elementary and
monomial bases.

Only homogeneous functions are represented.  Coefficients are Python ints;
the single place rationals appear is the triangular solve in
:func:`m_to_e`, which insists on an integral answer.

The chromatic pipeline uses ``p -> e`` only (Newton's identity).  The
monomial basis is here to check the m/e transition lemmas and the
dominance sparsity of the transition matrix.
"""

from __future__ import annotations

import enum
import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .checks import CheckReport
from .partitions import (
    Partition,
    add_ones,
    as_sequence,
    format_partition,
    parse_partition,
    partitions_of,
    partitions_up_to,
    transpose,
)


class Basis(str, enum.Enum):
    P = "p"
    E = "e"
    M = "m"
    M_AUG = "m_aug"


# bases in which b_λ b_μ = b_{λ ∪ μ}
_MULTIPLICATIVE = {Basis.P, Basis.E}


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function of a fixed degree in one basis."""

    basis: Basis
    degree: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.size != self.degree:
                raise ValueError(f"{tuple(lam)} is not a partition of {self.degree}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def zero(cls, basis: Basis, degree: int) -> "SymFunc":
        return cls(basis, degree, {})

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.terms())

    def terms(self) -> list[tuple[Partition, int]]:
        """Terms in reverse-lexicographic order of partitions."""
        return sorted(self.coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: "SymFunc"):
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError(
                f"incompatible operands: {self.basis.value}/{self.degree} "
                f"vs {other.basis.value}/{other.degree}"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, self.degree, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc(self.basis, self.degree, {k: other * v for k, v in self.coeffs.items()})
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis or self.basis not in _MULTIPLICATIVE:
            raise TypeError(f"product not supported in basis {self.basis.value}")
        return SymFunc(self.basis, self.degree + other.degree, _concat_product(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [{"partition": format_partition(lam), "coeff": str(c)} for lam, c in self.terms()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "SymFunc":
        coeffs = {parse_partition(t["partition"]): int(t["coeff"]) for t in doc["terms"]}
        return cls(Basis(doc["basis"]), int(doc["degree"]), coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        sym = self.basis.value
        pieces = []
        for lam, c in self.terms():
            label = "".join(str(p) if p < 10 else f"({p})" for p in lam) or "∅"
            pieces.append(f"{c:+d}{sym}_{label}")
        return " ".join(pieces).lstrip("+")


def _concat_product(a: Mapping[Partition, int], b: Mapping[Partition, int]) -> dict[Partition, int]:
    out: dict[Partition, int] = defaultdict(int)
    for lam, c in a.items():
        for mu, d in b.items():
            out[Partition(lam + mu)] += c * d
    return dict(out)


def _single(basis: Basis, lam: Sequence[int], coeff: int = 1) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(basis, lam.size, {lam: coeff})


def e_basis_elem(lam: Sequence[int]) -> SymFunc:
    return _single(Basis.E, lam)


def p_basis_elem(lam: Sequence[int]) -> SymFunc:
    return _single(Basis.P, lam)


def m_basis_elem(lam: Sequence[int]) -> SymFunc:
    return _single(Basis.M, lam)


def m_aug_basis_elem(lam: Sequence[int]) -> SymFunc:
    """The augmented monomial ``m̃_λ``, returned in the M basis."""
    lam = Partition(lam)
    factor = 1
    for mult in lam.multiplicities().values():
        factor *= factorial(mult)
    return _single(Basis.M, lam, factor)


# --------------------------------------------------------------------------
# p -> e via Newton's identity

_cache_lock = threading.Lock()


@lru_cache(maxsize=None)
def _power_sum_in_e(a: int) -> tuple[tuple[Partition, int], ...]:
    """``p_a`` in the e basis, from
    p_a = (−1)^{a−1} a e_a + Σ_{i<a} (−1)^{a−1+i} e_{a−i} p_i."""
    out: dict[Partition, int] = defaultdict(int)
    out[Partition((a,))] += (-1) ** (a - 1) * a
    for i in range(1, a):
        sign = (-1) ** (a - 1 + i)
        for lam, c in _power_sum_in_e(i):
            out[Partition(lam + (a - i,))] += sign * c
    return tuple((k, v) for k, v in out.items() if v)


def _power_sum(a: int) -> dict[Partition, int]:
    with _cache_lock:
        return dict(_power_sum_in_e(a))


def p_to_e(f: SymFunc) -> SymFunc:
    if f.basis != Basis.P:
        raise ValueError(f"p_to_e needs a P-basis function, got {f.basis.value}")
    out: dict[Partition, int] = defaultdict(int)
    for lam, c in f.coeffs.items():
        term: dict[Partition, int] = {Partition(): c}
        for part in lam:
            term = _concat_product(term, _power_sum(part))
        for k, v in term.items():
            out[k] += v
    return SymFunc(Basis.E, f.degree, out)


# --------------------------------------------------------------------------
# e <-> m

@lru_cache(maxsize=None)
def _zero_one_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row sums and column sums.

    ``rows`` is kept sorted and zero-free so permuted states share a cache
    entry; columns are consumed left to right."""
    if not cols:
        return 1 if not rows else 0
    c, rest = cols[0], cols[1:]
    if c > len(rows) or sum(rows) != c + sum(rest):
        return 0
    groups = sorted(Counter(rows).items(), reverse=True)
    total = 0
    # choose how many rows of each value receive a 1 in this column
    ranges = [range(min(m, c) + 1) for _, m in groups]
    for picks in product(*ranges):
        if sum(picks) != c:
            continue
        weight = 1
        new_rows: list[int] = []
        for (val, mult), t in zip(groups, picks):
            weight *= comb(mult, t)
            new_rows += [val - 1] * t + [val] * (mult - t)
        total += weight * _zero_one_count(tuple(sorted((r for r in new_rows if r), reverse=True)), rest)
    return total


def zero_one_count(rows: Sequence[int], cols: Sequence[int]) -> int:
    with _cache_lock:
        return _zero_one_count(tuple(Partition(rows)), tuple(Partition(cols)))


@lru_cache(maxsize=None)
def _e_in_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    d = lam.size
    out = []
    for mu in partitions_of(d):
        n = _zero_one_count(tuple(lam), tuple(mu))
        if n:
            out.append((mu, n))
    return tuple(out)


def e_in_m(lam: Sequence[int]) -> dict[Partition, int]:
    """``e_λ`` expanded in the monomial basis: ``[m_μ] e_λ``."""
    with _cache_lock:
        return dict(_e_in_m(Partition(lam)))


def e_to_m(f: SymFunc) -> SymFunc:
    if f.basis != Basis.E:
        raise ValueError(f"e_to_m needs an E-basis function, got {f.basis.value}")
    out: dict[Partition, int] = defaultdict(int)
    for lam, c in f.coeffs.items():
        for mu, n in e_in_m(lam).items():
            out[mu] += c * n
    return SymFunc(Basis.M, f.degree, out)


def m_to_e(f: SymFunc) -> SymFunc:
    """Invert :func:`e_to_m` by elimination from the lexicographically
    largest monomial down.

    ``e_{μ'}`` has leading monomial ``m_μ``; every other monomial it contains
    is dominated by ``μ`` and hence lexicographically smaller.  Both facts
    are checked as the elimination runs rather than assumed.
    """
    if f.basis == Basis.M_AUG:
        f = m_aug_to_m(f)
    if f.basis != Basis.M:
        raise ValueError(f"m_to_e needs an M-basis function, got {f.basis.value}")
    remaining: dict[Partition, Fraction] = {k: Fraction(v) for k, v in f.coeffs.items()}
    out: dict[Partition, int] = {}
    while remaining:
        mu = max(remaining)
        lam = transpose(mu)
        column = e_in_m(lam)
        if any(k > mu for k in column) or mu not in column:
            raise ArithmeticError(f"e_{tuple(lam)} does not have leading monomial m_{tuple(mu)}")
        q = remaining[mu] / column[mu]
        if q.denominator != 1:
            raise ArithmeticError(f"non-integral e-coefficient {q} at e_{tuple(lam)}")
        out[lam] = int(q)
        for k, n in column.items():
            v = remaining.get(k, 0) - q * n
            if v:
                remaining[k] = v
            else:
                remaining.pop(k, None)
    return SymFunc(Basis.E, f.degree, out)


def m_aug_to_m(f: SymFunc) -> SymFunc:
    if f.basis != Basis.M_AUG:
        raise ValueError("expected an M_AUG-basis function")
    out = {}
    for lam, c in f.coeffs.items():
        out[lam] = c * m_aug_basis_elem(lam)[lam]
    return SymFunc(Basis.M, f.degree, out)


# --------------------------------------------------------------------------
# coefficient sums

def sigma(f: SymFunc, prefix: Sequence[int], j: int | None = None) -> int:
    """Sum of ``[e_λ] f`` over ``λ`` whose transpose starts with ``prefix``
    and, if ``j`` is given, continues with ``j`` (``j = 0`` meaning the
    transpose has exactly ``len(prefix)`` parts)."""
    if f.basis != Basis.E:
        raise ValueError(f"sigma needs an E-basis function, got {f.basis.value}")
    prefix = as_sequence(prefix)
    if j is not None:
        if j < 0:
            raise ValueError("j must be non-negative")
        if j == 0 and sum(prefix) != f.degree:
            raise ValueError("j = 0 requires |prefix| to equal the degree")
    ell = len(prefix)
    total = 0
    for lam, c in f.coeffs.items():
        lt = transpose(lam)
        if len(lt) < ell or tuple(lt[:ell]) != prefix:
            continue
        if j is not None and (lt[ell] if len(lt) > ell else 0) != j:
            continue
        total += c
    return total


def verify_m_e_shift_lemmas(d_max: int) -> tuple[CheckReport, CheckReport]:
    """Exhaustively check

    * ``[e_λ] m_μ = [e_{λ+1^k}] m_{(k,μ)}`` for ``k ≥ μ_1``, and
    * ``σ_{(k,ν)}(m_{(k,μ)}) = σ_ν(m_μ)`` for ``k ≥ μ_1, ν_1``,

    over ``|μ| ≤ d_max`` and ``k ≤ d_max``.
    """
    if d_max < 1:
        raise ValueError("d_max must be positive")
    shift = CheckReport("e-coefficient shift [e_λ]m_μ = [e_{λ+1^k}]m_(k,μ)")
    sig = CheckReport("sigma shift σ_(k,ν)(m_(k,μ)) = σ_ν(m_μ)")
    for mu in partitions_up_to(d_max):
        base = m_to_e(m_basis_elem(mu))
        for k in range(max(1, mu[0] if mu else 1), d_max + 1):
            big = m_to_e(m_basis_elem((k,) + tuple(mu)))
            for lam in partitions_of(mu.size):
                shift.record(base[lam] == big[add_ones(lam, k)], mu=mu, lam=lam, k=k)
            for nu in partitions_up_to(mu.size):
                if nu and nu[0] > k:
                    continue
                lhs = sigma(big, (k,) + tuple(nu))
                rhs = sigma(base, tuple(nu)) if nu else sum(base.coeffs.values())
                sig.record(lhs == rhs, mu=mu, nu=nu, k=k, lhs=lhs, rhs=rhs)
    return shift, sig


def linear_combination(terms: Iterable[tuple[int, SymFunc]], basis: Basis, degree: int) -> SymFunc:
    out = SymFunc.zero(basis, degree)
    for c, f in terms:
        out = out + c * f
    return out
