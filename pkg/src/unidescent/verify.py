"""Self-check suites behind ``unidescent verify``.

Each suite sweeps every input up to a size bound, compares the engines with
an independent route (brute force, a second algorithm, or the value a
theorem pins down) and stops at the first counterexample.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Iterator

from .dlmult import closed_form, dl_multiplicity, inner_sum
from .ggp import Model, bessel_multiplicity, descend, fj_multiplicity, first_occurrence_pair, theta_lift
from .partitions import (
    Partition,
    centralizer_order,
    partitions_of,
    remove_first_column,
    remove_first_row,
    staircase,
    transpose,
    union,
)
from .symchar import ORACLE_BOUND, character_table, fixed_space_dimension, oracle_character, restriction_multiplicity

__all__ = ["SuiteResult", "SUITES", "run_suites", "cycle_type", "two_transverse_by_definition"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    seconds: float
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks in {self.seconds:.2f}s"
        if self.counterexample:
            text += f" -- first counterexample: {self.counterexample}"
        return text


# A check yields None for every passing case and a description for a failure.
Check = Iterator["str | None"]


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return Partition.from_multiset(lengths)


def two_transverse_by_definition(a: Partition, b: Partition) -> bool:
    """Literal reading of the definition, kept apart from the library predicate."""
    width = max(len(a), len(b))
    x = list(a) + [0] * (width - len(a))
    y = list(b) + [0] * (width - len(b))
    if any(abs(p - q) > 1 for p, q in zip(x, y)):
        return False
    common: dict[int, int] = {}
    for p, q in zip(x, y):
        if p == q and p > 0:
            common[p] = common.get(p, 0) + 1
    return all(c % 2 == 0 for c in common.values())


def check_oracle(max_n: int) -> Check:
    for n in range(min(max_n, ORACLE_BOUND) + 1):
        table = character_table(n)
        for lam in table.partitions:
            for mu in table.partitions:
                a, b = table.value(lam, mu), oracle_character(lam, mu)
                yield None if a == b else f"sigma_{lam}({mu}): MN {a}, oracle {b}"


def check_orthogonality(max_n: int) -> Check:
    for n in range(max_n + 1):
        table = character_table(n)
        shapes = table.partitions
        for lam in shapes:
            for nu in shapes:
                s = sum(
                    (Fraction(table.value(lam, mu) * table.value(nu, mu), centralizer_order(mu)) for mu in shapes),
                    Fraction(0),
                )
                yield None if s == (lam == nu) else f"row orthogonality <{lam},{nu}> = {s}"
        for mu in shapes:
            for rho in shapes:
                s = sum(table.value(lam, mu) * table.value(lam, rho) for lam in shapes)
                expected = centralizer_order(mu) if mu == rho else 0
                yield None if s == expected else f"column orthogonality ({mu},{rho}) = {s}"


def check_branching(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            star = remove_first_row(lam)
            for nu in partitions_of(n - lam[0]):
                got = restriction_multiplicity(lam, nu, lam[0])
                yield None if got == (nu == star) else f"<sigma_{lam}, sigma_{nu} x 1> = {got}"
            for m in range(lam[0] + 1, n + 1):
                got = fixed_space_dimension(lam, m)
                yield None if got == 0 else f"<sigma_{lam}, 1>_S{m} = {got}"


def check_vanishing(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            k = len(lam)
            for size in range(n - k):
                for mu_prime in partitions_of(size):
                    got = inner_sum(lam, mu_prime)
                    yield None if got == 0 else f"inner_sum({lam}, {mu_prime}) = {got}"


def check_closed_form(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            signs: set[int] = set()
            for lam in (p for p in partitions_of(n) if len(p) == k):
                for mu2 in partitions_of(n - k):
                    a, b = dl_multiplicity(lam, mu2), closed_form(lam, mu2)
                    if abs(a) != abs(b):
                        yield f"dl_multiplicity({lam}, {mu2}) = {a}, closed form {b}"
                        continue
                    if b:
                        signs.add(a // b)
                    yield None
            yield None if len(signs) <= 1 else f"signs {sorted(signs)} for n={n}, k={k}"


def check_bessel(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            k = len(lam)
            target = remove_first_column(lam)
            for m in range(n - 1, -1, -2):
                if m > n - k or (m == n - k and k % 2 == 0):
                    continue
                for nu in partitions_of(m):
                    expected = int(m == n - k and nu == target)
                    got = bessel_multiplicity(lam, nu)
                    ok = got.value == expected and got.covered
                    yield None if ok else f"Bessel m({lam}, {nu}) = {got.value}, expected {expected}"


def check_theta(max_n: int) -> Check:
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            lam_t = transpose(lam)
            for target in range(max_n + 1):
                lift = set(theta_lift(lam, target).components)
                brute = {p for p in partitions_of(target) if two_transverse_by_definition(lam_t, transpose(p))}
                yield None if lift == brute else f"Theta_{n},{target}({lam}): {sorted(lift)} vs {sorted(brute)}"
                if n and target < n - lam[0]:
                    yield None if not lift else f"Theta_{n},{target}({lam}) nonzero below n - lam_1"
            if n:
                lift = theta_lift(lam, n - lam[0]).components
                yield None if lift == (remove_first_row(lam),) else f"Theta_{n},{n - lam[0]}({lam}) = {lift}"


def check_seesaw(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for m in range(n - 2, -1, -2):
                for nu in partitions_of(m):
                    decl = fj_multiplicity(lam, nu, "declarative")
                    if not decl.covered:
                        continue
                    base = max(lam.first, nu.first)
                    for mu0 in range(base, base + 3):
                        got = fj_multiplicity(lam, nu, "seesaw", mu0).value
                        yield None if got == decl.value else (
                            f"FJ m({lam}, {nu}): declarative {decl.value}, seesaw(mu0={mu0}) {got}"
                        )


def check_cuspidal(max_n: int) -> Check:
    k = 1
    while k * (k + 1) // 2 <= max_n:
        lam = staircase(k)
        model = Model.BESSEL if k % 2 else Model.FOURIER_JACOBI
        res = descend(lam, model, verify=True)
        expected_ell0 = (k - 1) // 2 if k % 2 else k // 2
        ok = res.determined and res.ell0 == expected_ell0 and res.descent == staircase(k - 1)
        yield None if ok else f"descent of {lam}: {res}"
        pair = first_occurrence_pair(lam, verify=False)
        yield None if pair.rows == k else f"k reconstruction for {lam}: {pair.rows}"
        k += 1


def check_inner_sum_brute(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        table = character_table(n)
        for lam in partitions_of(n):
            lam_t = transpose(lam)
            for mu_prime in (p for size in range(n + 1) for p in partitions_of(size)):
                r = n - sum(mu_prime)
                total = sum(table.value(lam_t, union(mu_prime, cycle_type(w))) for w in permutations(range(r)))
                expected = Fraction(factorial(n) * total, centralizer_order(mu_prime) * factorial(r))
                got = inner_sum(lam, mu_prime)
                yield None if got == expected else f"inner_sum({lam}, {mu_prime}) = {got}, brute force {expected}"


SUITES: dict[str, tuple[Callable[[int], Check], int | None]] = {
    # name: (check, own size cap or None)
    "oracle": (check_oracle, ORACLE_BOUND),
    "orthogonality": (check_orthogonality, None),
    "branching": (check_branching, None),
    "vanishing": (check_vanishing, None),
    "closed-form": (check_closed_form, None),
    "bessel": (check_bessel, None),
    "theta": (check_theta, None),
    "seesaw": (check_seesaw, None),
    "cuspidal": (check_cuspidal, None),
    "inner-sum": (check_inner_sum_brute, 7),
}


def run_suite(name: str, max_n: int) -> SuiteResult:
    check, cap = SUITES[name]
    bound = max_n if cap is None else min(max_n, cap)
    start = time.perf_counter()
    checked = 0
    for failure in check(bound):
        checked += 1
        if failure is not None:
            return SuiteResult(name, False, checked, time.perf_counter() - start, failure)
    return SuiteResult(name, True, checked, time.perf_counter() - start)


def run_suites(max_n: int, names: list[str] | None = None) -> list[SuiteResult]:
    return [run_suite(name, max_n) for name in (names or list(SUITES))]
