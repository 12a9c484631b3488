from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions
from unidescent.dlmult import (
    CaseTag,
    InducedDatum,
    MultiplicityResult,
    bessel_case,
    closed_form,
    dl_multiplicity,
    induced_multiplicity,
    inner_sum,
    unipotent_decomposition,
)
from unidescent.errors import ParityError, SizeMismatchError
from unidescent.partitions import (
    Partition,
    centralizer_order,
    partitions_of,
    remove_first_column,
    transpose,
    union,
)
from unidescent.symchar import mn_character
from unidescent.verify import cycle_type

P = Partition


def brute_inner_sum(lam: Partition, mu_prime: Partition) -> Fraction:
    n = sum(lam)
    r = n - sum(mu_prime)
    total = sum(mn_character(transpose(lam), union(mu_prime, cycle_type(w))) for w in permutations(range(r)))
    return Fraction(factorial(n) * total, centralizer_order(mu_prime) * factorial(r))


def brute_dl(lam: Partition, mu2: Partition) -> Fraction:
    # sum over labelled sub-multisets of mu2, inner sums by brute force
    n = sum(lam)
    total = Fraction(0)
    for mask in range(1 << len(mu2)):
        sub = Partition.from_multiset(p for i, p in enumerate(mu2) if mask >> i & 1)
        total += (-1) ** (n - sum(sub)) * centralizer_order(sub) * brute_inner_sum(lam, sub)
    return total / factorial(n)


def test_inner_sum_examples():
    assert inner_sum(P([2, 1]), P()) == 0
    for n in range(2, 6):
        assert inner_sum(P([n]), P()) == 0
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            assert inner_sum(lam, mu) == factorial(4) // centralizer_order(mu) * mn_character(transpose(lam), mu)
    with pytest.raises(SizeMismatchError):
        inner_sum(P([1]), P([2]))


@settings(deadline=None, max_examples=60)
@given(partitions(6, 1), st.data())
def test_inner_sum_brute_force(lam, data):
    size = data.draw(st.integers(0, sum(lam)))
    mu_prime = data.draw(st.sampled_from(partitions_of(size)))
    assert inner_sum(lam, mu_prime) == brute_inner_sum(lam, mu_prime)


@pytest.mark.parametrize("n", range(1, 9))
def test_inner_sum_vanishes_below(n):
    for lam in partitions_of(n):
        for size in range(n - len(lam)):
            assert all(inner_sum(lam, mu) == 0 for mu in partitions_of(size))


def test_dl_examples():
    assert dl_multiplicity(P([1]), P()) == -1
    assert closed_form(P([3, 2, 1]), P([2, 1])) == 0
    assert closed_form(P([2, 1]), P([1])) == 1
    assert closed_form(P([1, 1]), P()) == 1
    with pytest.raises(SizeMismatchError):
        closed_form(P([2, 1]), P())


@settings(deadline=None, max_examples=40)
@given(partitions(5, 1), st.data())
def test_dl_matches_labelled_expansion(lam, data):
    size = data.draw(st.integers(0, sum(lam)))
    mu2 = data.draw(st.sampled_from(partitions_of(size)))
    assert dl_multiplicity(lam, mu2) == brute_dl(lam, mu2)


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_with_consistent_sign(n):
    for k in range(1, n + 1):
        ratios = set()
        for lam in (p for p in partitions_of(n) if len(p) == k):
            for size in range(n - k):
                assert all(dl_multiplicity(lam, mu2) == 0 for mu2 in partitions_of(size))
            for mu2 in partitions_of(n - k):
                a, b = dl_multiplicity(lam, mu2), closed_form(lam, mu2)
                assert abs(a) == abs(b)
                if b:
                    ratios.add(a // b)
        assert len(ratios) <= 1


@pytest.mark.parametrize("n", range(9))
def test_decomposition_has_unit_norm(n):
    for lam in partitions_of(n):
        dec = unipotent_decomposition(lam)
        assert set(dec.coeff) == set(partitions_of(n))
        assert dec.norm() == 1


def test_induced_examples():
    lam = P([3, 2, 1])
    one = induced_multiplicity(lam, InducedDatum(2, P([2, 1])))
    assert (one.value, one.covered, one.case_tag) == (1, True, CaseTag.FIRST_DESCENT)
    assert induced_multiplicity(lam, InducedDatum(2, P([3]))).value == 0
    zero = induced_multiplicity(P([4, 3, 2]), InducedDatum(4, P([2])))
    assert (zero.value, zero.covered, zero.case_tag) == (0, True, CaseTag.VANISHING_BELOW)
    with pytest.raises(ParityError):
        induced_multiplicity(lam, InducedDatum(1, P([2, 1])))
    with pytest.raises(ValueError):
        InducedDatum(0, P())


@pytest.mark.parametrize("n", range(1, 9))
def test_induced_first_descent_is_delta(n):
    for lam in partitions_of(n):
        k = len(lam)
        if k % 2 == 0:
            continue
        target = remove_first_column(lam)
        for nu in partitions_of(n - k):
            res = induced_multiplicity(lam, InducedDatum((k + 1) // 2, nu))
            assert abs(res.raw) == (nu == target) == res.value


def test_case_tags():
    assert bessel_case(6, 3, 1) == (True, CaseTag.VANISHING_BELOW)
    assert bessel_case(6, 3, 3) == (True, CaseTag.FIRST_DESCENT)
    assert bessel_case(6, 2, 4)[0] is False
    assert bessel_case(6, 3, 5)[0] is False
    assert bessel_case(6, 1, 5) == (True, CaseTag.FIRST_DESCENT)


@given(st.integers(-3, 3), st.booleans(), st.sampled_from(list(CaseTag)))
def test_result_json_round_trip(raw, covered, tag):
    res = MultiplicityResult(raw, abs(raw), covered, tag)
    assert MultiplicityResult.from_json(res.to_json()) == res
