from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from math import comb, factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions
from unidescent.errors import ContainmentError, PartitionParseError
from unidescent.partitions import (
    Partition,
    add_first_column,
    binom_embeddings,
    centralizer_order,
    class_size,
    contains,
    is_2transverse,
    is_close,
    is_even,
    is_transverse,
    meet,
    parse_partition,
    partitions_of,
    perm_sign,
    remove_first_column,
    remove_first_row,
    staircase,
    sub_multisets,
    transpose,
    union,
)

P = Partition


def test_partition_validation():
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, 0])
    assert P.from_multiset([1, 3, 0, 2]) == (3, 2, 1)
    assert P().first == 0 and P([4, 1]).rows == 2 and P([4, 1]).size == 5


@pytest.mark.parametrize("text, expected", [("3,2,1", (3, 2, 1)), ("[]", ()), ("", ()), (" 2, 2 ", (2, 2)), ("[4,1]", (4, 1))])
def test_parse(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["1,2", "a", "3,,1", "3,-1", "0"])
def test_parse_rejects(text):
    with pytest.raises(PartitionParseError):
        parse_partition(text)


@given(partitions(12))
def test_text_round_trip(lam):
    assert parse_partition(str(lam)) == lam


def test_transpose_examples():
    assert transpose(P()) == ()
    assert transpose(P([3, 1])) == (2, 1, 1)
    assert transpose(staircase(3)) == (3, 2, 1)


def test_row_and_column_removal():
    assert remove_first_column(P([3, 2, 1])) == (2, 1)
    assert remove_first_column(P([1, 1, 1])) == ()
    assert remove_first_column(P([4, 2, 2, 1])) == (3, 1, 1)
    assert remove_first_row(P([3, 2, 1])) == (2, 1)
    assert remove_first_row(P([5])) == ()
    assert remove_first_row(P([2, 2])) == (2,)
    assert add_first_column(P([2, 1]), 3) == (3, 2, 1)


@pytest.mark.parametrize("n", range(13))
def test_transpose_identities_exhaustive(n):
    for lam in partitions_of(n):
        assert transpose(transpose(lam)) == lam
        assert sum(remove_first_column(lam)) == n - len(lam)
        assert sum(remove_first_row(lam)) == n - lam.first
        assert remove_first_row(transpose(lam)) == transpose(remove_first_column(lam))


@given(partitions(12, 1))
def test_first_column_round_trip(lam):
    assert add_first_column(remove_first_column(lam), len(lam)) == lam


def test_multiset_examples():
    assert union(P([2, 1]), P([2])) == (2, 2, 1)
    assert union(P([3]), P([1, 1])) == (3, 1, 1)
    assert contains(P([2, 1]), P([2, 1, 1]))
    assert not contains(P([2, 2]), P([2, 1, 1]))
    assert contains(P(), P([3]))
    assert set(sub_multisets(P([1, 1]))) == {P(), P([1]), P([1, 1])}
    assert set(sub_multisets(P([2, 1]))) == {P(), P([1]), P([2]), P([2, 1])}
    assert len(list(sub_multisets(P([2, 1, 1])))) == 6
    assert binom_embeddings(P([2, 1, 1]), P([2, 1])) == 2
    assert binom_embeddings(P([3, 3, 1]), P([3])) == 2
    with pytest.raises(ContainmentError):
        binom_embeddings(P([2, 1]), P([3]))


@given(partitions(10))
def test_sub_multisets_distinct_and_contained(lam):
    subs = list(sub_multisets(lam))
    assert len(subs) == len(set(subs)) == prod(m + 1 for m in Counter(lam).values())
    assert all(contains(s, lam) for s in subs)
    assert binom_embeddings(lam, lam) == 1


@given(partitions(8), partitions(8))
def test_binom_counts_labelled_subsets(a, b):
    lam = union(a, b)
    # labelled positions of lam whose values form the multiset a
    idx = range(len(lam))
    count = sum(1 for c in combinations(idx, len(a)) if P.from_multiset(lam[i] for i in c) == a)
    assert binom_embeddings(lam, a) == count


def test_centralizer_examples():
    assert centralizer_order(P([1, 1, 1])) == 6
    assert centralizer_order(P([3])) == 3
    assert centralizer_order(P([2, 1])) == 2


@pytest.mark.parametrize("n", range(11))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


@given(partitions(6), partitions(4))
def test_centralizer_multiplicative(a, b):
    ab = union(a, b)
    assert centralizer_order(ab) == centralizer_order(a) * centralizer_order(b) * binom_embeddings(ab, a)


def _brute_sign(mu: Partition) -> int:
    # build a permutation of this cycle type and count inversions
    perm, start = [], 0
    for length in mu:
        perm += [start + (i + 1) % length for i in range(length)]
        start += length
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def test_perm_sign_examples():
    assert perm_sign(P([1, 1, 1])) == 1
    assert perm_sign(P([2])) == -1
    assert perm_sign(P([3, 2])) == -1 == _brute_sign(P([3, 2]))


@given(partitions(10))
def test_perm_sign_matches_inversions(mu):
    assert perm_sign(mu) == _brute_sign(mu)


def test_theta_predicates_examples():
    assert is_close(P([2, 2]), P([2, 1]))
    assert is_2transverse(P([1, 1]), P([1, 1]))
    assert is_2transverse(P([2, 1]), P([1]))
    assert meet(P([3, 2, 1]), P([3, 1, 1])) == (3, 1)
    assert is_even(P([2, 2, 1, 1])) and not is_even(P([2, 1, 1]))
    assert not is_2transverse(P([2]), P([2]))


@given(partitions(8), partitions(8))
def test_transverse_implies_2transverse(a, b):
    if is_transverse(a, b):
        assert is_2transverse(a, b)
    assert is_2transverse(a, b) == is_2transverse(b, a)


@pytest.mark.parametrize("n", range(1, 11))
def test_first_row_is_unique_2transverse_partner(n):
    for lam in partitions_of(n):
        star = remove_first_row(lam)
        assert is_transverse(transpose(lam), transpose(star))
        partners = [nu for nu in partitions_of(n - lam.first) if is_2transverse(transpose(lam), transpose(nu))]
        assert partners == [star]


def _count_partitions(n: int) -> int:
    # Euler's pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_partitions_of_counts_and_order():
    assert partitions_of(0) == (P(),)
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(10)) == 42
    for n in range(16):
        shapes = partitions_of(n)
        assert len(shapes) == len(set(shapes)) == _count_partitions(n)
        assert list(shapes) == sorted(shapes, reverse=True)


@given(st.integers(0, 7))
def test_partitions_of_matches_cycle_types(n):
    from unidescent.verify import cycle_type

    seen = {cycle_type(w) for w in permutations(range(n))}
    assert seen == set(partitions_of(n))


@given(st.integers(0, 8))
def test_staircase(k):
    lam = staircase(k)
    assert sum(lam) == k * (k + 1) // 2 and transpose(lam) == lam
    assert remove_first_column(lam) == staircase(max(k - 1, 0))
