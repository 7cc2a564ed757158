"""Integer partitions and the small amount of partition algebra the rest of
the package needs: transpose, dominance, partial dominance and the
``λ ± 1^k`` shifts.

Partitions are plain tuples kept in canonical (weakly decreasing, no zeros)
form, so they hash and compare like tuples and can be used as dict keys.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """An integer partition, canonicalized on construction.

    >>> Partition([1, 3, 0, 2])
    Partition(3, 2, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        """``n_i(λ)``: the number of parts equal to ``i``."""
        return Counter(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def __str__(self) -> str:
        return format_partition(self)


def as_sequence(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate an order-sensitive sequence of positive integers."""
    seq = tuple(int(p) for p in parts)
    if any(p < 1 for p in seq):
        raise ValueError(f"sequence parts must be positive: {seq}")
    return seq


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition string {text!r}") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def transpose(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order on partitions of the same size."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes, got {tuple(lam)} and {tuple(mu)}")
    lam_sums = list(accumulate(lam))
    total = sum(lam)
    for i, m in enumerate(accumulate(mu)):
        have = lam_sums[i] if i < len(lam_sums) else total
        if have < m:
            return False
    return True


def partially_dominates(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """True if ``mu`` agrees with ``nu`` on its first ``len(mu)`` entries, or
    some prefix sum of ``mu`` strictly exceeds the matching (zero-padded)
    prefix sum of ``nu``.  Neither argument needs to be sorted."""
    padded = list(nu[: len(mu)]) + [0] * max(0, len(mu) - len(nu))
    if list(mu) == padded:
        return True
    return any(a > b for a, b in zip(accumulate(mu), accumulate(padded)))


def add_ones(lam: Sequence[int], k: int) -> Partition:
    """``λ + 1^k``: add one to each of the first ``k`` parts, padding with zeros."""
    if k < 0:
        raise ValueError("k must be non-negative")
    parts = list(Partition(lam)) + [0] * max(0, k - len(lam))
    return Partition(p + 1 if i < k else p for i, p in enumerate(parts))


def subtract_ones(lam: Sequence[int], k: int) -> Partition:
    """``λ − 1^k``; requires at least ``k`` parts."""
    lam = Partition(lam)
    if len(lam) < k:
        raise ValueError(f"{tuple(lam)} has fewer than {k} parts")
    return Partition(p - 1 if i < k else p for i, p in enumerate(lam))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    for parts in _partitions(n, n if max_part is None else min(n, max_part)):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for r in range(n + 1):
        yield from partitions_of(r)
