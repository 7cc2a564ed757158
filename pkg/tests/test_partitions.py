from itertools import product

import pytest
from hypothesis import given, strategies as st

from chromsink.partitions import (
    Partition,
    add_ones,
    dominates,
    format_partition,
    parse_partition,
    partially_dominates,
    partitions_of,
    partitions_up_to,
    subtract_ones,
    transpose,
)

partitions = st.lists(st.integers(1, 8), max_size=8).map(Partition)


def test_canonical_form():
    assert Partition([1, 3, 0, 2]) == (3, 2, 1)
    assert Partition([]) == ()
    assert Partition([2, 5]).size == 7
    assert Partition([2, 5]).length == 2
    with pytest.raises(ValueError):
        Partition([3, -1])


@pytest.mark.parametrize("lam,expected", [((3, 2, 2, 1), (4, 3, 1)), ((), ()), ((5,), (1, 1, 1, 1, 1))])
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected


def test_transpose_involution_exhaustive():
    for lam in partitions_up_to(12):
        assert transpose(transpose(lam)) == lam
        assert transpose(lam).size == lam.size


def test_parse_and_format():
    assert parse_partition("4,3,1") == (4, 3, 1)
    assert parse_partition(" 1,3 ") == (3, 1)
    assert parse_partition("") == ()
    assert format_partition(Partition((6, 4, 3, 1, 1, 1, 1))) == "6,4,3,1,1,1,1"
    assert format_partition(()) == ""
    for bad in ("4,,1", "a", "3,0", "-2"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(partitions)
def test_format_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("lam,mu,expected", [((3, 1), (2, 2), True), ((2, 2), (3, 1), False), ((2, 2), (2, 2), True)])
def test_dominates_examples(lam, mu, expected):
    assert dominates(lam, mu) is expected


def test_dominates_rejects_size_mismatch():
    with pytest.raises(ValueError):
        dominates((3,), (2,))


def test_dominance_is_partial_order_and_reversed_by_transpose():
    for n in range(1, 9):
        ps = list(partitions_of(n))
        for a in ps:
            assert dominates(a, a)
            for b in ps:
                ab = dominates(a, b)
                if ab and dominates(b, a):
                    assert a == b
                assert ab == dominates(transpose(b), transpose(a))
                if ab:
                    for c in ps:
                        if dominates(b, c):
                            assert dominates(a, c)


@pytest.mark.parametrize("mu,nu,expected", [((3, 2), (3, 2, 5), True), ((4,), (3, 9), True), ((2, 2), (3, 1), False)])
def test_partial_dominance_examples(mu, nu, expected):
    assert partially_dominates(mu, nu) is expected


def test_partial_dominance_brute_force():
    seqs = [s for length in range(0, 4) for s in product(range(1, 4), repeat=length)]
    for mu in seqs:
        for nu in seqs:
            padded = list(nu[: len(mu)]) + [0] * (len(mu) - len(nu[: len(mu)]))
            agree = list(mu) == padded
            strict = any(sum(mu[: i + 1]) > sum(padded[: i + 1]) for i in range(len(mu)))
            assert partially_dominates(mu, nu) == (agree or strict)


def test_add_and_subtract_ones():
    assert add_ones((3, 2, 1), 2) == (4, 3, 1)
    assert add_ones((3, 2, 1), 5) == (4, 3, 2, 1, 1)
    assert add_ones((), 3) == (1, 1, 1)
    assert subtract_ones((3, 2, 2), 2) == (2, 2, 1)
    assert subtract_ones((3, 1, 1), 2) == (2, 1)
    assert subtract_ones((1, 1), 2) == ()
    with pytest.raises(ValueError):
        subtract_ones((2,), 2)


@given(partitions, st.integers(0, 10))
def test_subtract_undoes_add(lam, k):
    assert subtract_ones(add_ones(lam, k), k) == lam


def test_partition_counts_and_order():
    assert [sum(1 for _ in partitions_of(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    six = list(partitions_of(6))
    assert six == sorted(six, reverse=True)
    assert list(partitions_of(5, max_part=2)) == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
