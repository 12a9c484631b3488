"""Exact characters of the symmetric groups.

``mn_character`` evaluates sigma_lambda(w_mu) with the Murnaghan-Nakayama rule
on beta-sets, stripping cycles in decreasing order.  ``oracle_character`` is
an unrelated route through symmetric functions (Kostka numbers and power sums
in the monomial basis) and exists only to check the first.

Whole tables are built per n on demand and published in a process-wide
registry; the command line persists that registry between runs.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import OracleBoundError, SizeMismatchError
from .partitions import (
    Partition,
    centralizer_order,
    parse_partition,
    partitions_of,
    perm_sign,
    union,
)

__all__ = [
    "mn_character",
    "oracle_character",
    "oracle_table",
    "CharacterTable",
    "character_table",
    "install_table",
    "registered_tables",
    "clear_tables",
    "ClassFunction",
    "inner_product",
    "restriction_multiplicity",
    "fixed_space_dimension",
    "ORACLE_BOUND",
]

ORACLE_BOUND = 7


def _check_sizes(lam: Partition, mu: Partition) -> None:
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    rows = len(lam)
    beta = [lam[i] + rows - 1 - i for i in range(rows)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length = beads jumped over when sliding b down to b - r
        leg = sum(1 for c in beta if target < c < b)
        moved = sorted([c for c in beta if c != b] + [target], reverse=True)
        smaller = tuple(p for p in (moved[j] - (rows - 1 - j) for j in range(rows)) if p)
        value = _mn(smaller, rest)
        total += -value if leg % 2 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """sigma_lam evaluated at a permutation of cycle type ``mu``."""
    _check_sizes(lam, mu)
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


# ---------------------------------------------------------------------------
# Independent oracle: p_mu = sum_lam chi_lam(mu) s_lam, solved in the monomial basis.


@lru_cache(maxsize=None)
def _horizontal_strips(shape: tuple[int, ...], k: int) -> tuple[tuple[int, ...], ...]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``k`` boxes."""
    rows = list(shape) + [0]
    out = []

    def grow(i: int, left: int, acc: list[int]) -> None:
        if i == len(rows):
            if left == 0:
                out.append(tuple(p for p in acc if p))
            return
        # row i may grow up to the old length of row i-1 (strip condition)
        cap = left if i == 0 else min(left, shape[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            grow(i + 1, left - add, acc + [rows[i] + add])

    grow(0, k, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _kostka_counts(content: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Map shape -> number of SSYT of that shape with the given content."""
    if not content:
        return {(): 1}
    counts = _kostka_counts(content[:-1])
    out: dict[tuple[int, ...], int] = {}
    for shape, c in counts.items():
        for bigger in _horizontal_strips(shape, content[-1]):
            out[bigger] = out.get(bigger, 0) + c
    return out


def _power_sum_monomial(mu: Partition, nvars: int) -> dict[tuple[int, ...], int]:
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for r in mu:
        nxt: dict[tuple[int, ...], int] = {}
        for expo, c in poly.items():
            for i in range(nvars):
                e = list(expo)
                e[i] += r
                key = tuple(e)
                nxt[key] = nxt.get(key, 0) + c
        poly = nxt
    return poly


@lru_cache(maxsize=None)
def _oracle_rows(n: int) -> dict[tuple[Partition, Partition], int]:
    shapes = partitions_of(n)  # reverse-lex order refines dominance, so Kostka is unitriangular
    kostka = {kappa: _kostka_counts(tuple(kappa)) for kappa in shapes}  # kappa = content
    table: dict[tuple[Partition, Partition], int] = {}
    for mu in shapes:
        poly = _power_sum_monomial(mu, n)
        # coefficient of m_kappa in p_mu = coefficient of x^kappa
        rhs = {kappa: poly.get(tuple(kappa) + (0,) * (n - len(kappa)), 0) for kappa in shapes}
        chi: dict[Partition, Fraction] = {}
        for kappa in shapes:
            acc = Fraction(rhs[kappa])
            for lam in chi:
                acc -= chi[lam] * kostka[kappa].get(tuple(lam), 0)
            diag = kostka[kappa].get(tuple(kappa), 0)
            chi[kappa] = acc / diag
        for lam, value in chi.items():
            if value.denominator != 1:
                raise ArithmeticError(f"non-integral oracle value at {lam}, {mu}: {value}")
            table[(lam, mu)] = int(value)
    return table


def oracle_character(lam: Partition, mu: Partition, bound: int = ORACLE_BOUND) -> int:
    """sigma_lam(w_mu) from Kostka numbers and power sums; refuses n > ``bound``."""
    _check_sizes(lam, mu)
    n = sum(lam)
    if n > bound:
        raise OracleBoundError(f"oracle limited to n <= {bound}, got n = {n}")
    return _oracle_rows(n)[(Partition(lam), Partition(mu))]


def oracle_table(n: int, bound: int = ORACLE_BOUND) -> "CharacterTable":
    if n > bound:
        raise OracleBoundError(f"oracle limited to n <= {bound}, got n = {n}")
    shapes = partitions_of(n)
    rows = _oracle_rows(n)
    return CharacterTable(n, shapes, tuple(tuple(rows[(lam, mu)] for mu in shapes) for lam in shapes))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    """Square integer matrix sigma_lam(w_mu), rows and columns in :func:`partitions_of` order."""

    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    _index: dict[Partition, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.values) != len(self.partitions) or any(
            len(row) != len(self.partitions) for row in self.values
        ):
            raise ValueError(f"character table for n={self.n} is not square")
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.partitions)})

    @classmethod
    def build(cls, n: int) -> "CharacterTable":
        shapes = partitions_of(n)
        return cls(n, shapes, tuple(tuple(mn_character(lam, mu) for mu in shapes) for lam in shapes))

    def value(self, lam: Partition, mu: Partition) -> int:
        try:
            return self.values[self._index[lam]][self._index[mu]]
        except KeyError:
            raise SizeMismatchError(f"{lam}, {mu} are not both partitions of {self.n}") from None

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self._index[lam]]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "partitions": [str(p) for p in self.partitions],
            "values": [[str(v) for v in row] for row in self.values],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CharacterTable":
        n = int(data["n"])
        shapes = tuple(parse_partition(s) for s in data["partitions"])
        if shapes != partitions_of(n):
            raise ValueError(f"stored partition order for n={n} does not match")
        return cls(n, shapes, tuple(tuple(int(v) for v in row) for row in data["values"]))


_TABLES: dict[int, CharacterTable] = {}
_TABLES_LOCK = threading.Lock()


def character_table(n: int) -> CharacterTable:
    table = _TABLES.get(n)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(n)
            if table is None:
                table = CharacterTable.build(n)
                _TABLES[n] = table
    return table


def install_table(table: CharacterTable) -> None:
    with _TABLES_LOCK:
        _TABLES.setdefault(table.n, table)


def registered_tables() -> list[CharacterTable]:
    return [_TABLES[n] for n in sorted(_TABLES)]


def clear_tables() -> None:
    with _TABLES_LOCK:
        _TABLES.clear()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """Rational-valued class function on S_n, keyed by cycle type. Missing classes read as 0."""

    n: int
    coefficients: Mapping[Partition, Fraction]

    def __post_init__(self) -> None:
        for mu in self.coefficients:
            if sum(mu) != self.n:
                raise SizeMismatchError(f"class {mu} is not a partition of {self.n}")

    def __call__(self, mu: Partition) -> Fraction:
        return Fraction(self.coefficients.get(mu, 0))

    @classmethod
    def irreducible(cls, lam: Partition) -> "ClassFunction":
        n = sum(lam)
        table = character_table(n)
        return cls(n, {mu: Fraction(table.value(lam, mu)) for mu in table.partitions})

    @classmethod
    def trivial(cls, n: int) -> "ClassFunction":
        return cls(n, {mu: Fraction(1) for mu in partitions_of(n)})

    @classmethod
    def sign(cls, n: int) -> "ClassFunction":
        return cls(n, {mu: Fraction(perm_sign(mu)) for mu in partitions_of(n)})

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise SizeMismatchError(f"cannot add class functions on S_{self.n} and S_{other.n}")
        keys = set(self.coefficients) | set(other.coefficients)
        return ClassFunction(self.n, {mu: self(mu) + other(mu) for mu in keys})

    def scale(self, c: Fraction | int) -> "ClassFunction":
        return ClassFunction(self.n, {mu: c * v for mu, v in self.coefficients.items()})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """<f, g> = sum_mu f(mu) g(mu) / z_mu  (characters of S_n are real)."""
    if f.n != g.n:
        raise SizeMismatchError(f"class functions on S_{f.n} and S_{g.n}")
    total = Fraction(0)
    for mu in partitions_of(f.n):
        a = f(mu)
        if a:
            total += a * g(mu) / centralizer_order(mu)
    return total


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return int(value)


def restriction_multiplicity(lam: Partition, nu: Partition, m: int) -> int:
    """Multiplicity of sigma_nu (x) trivial in sigma_lam restricted to S_{n-m} x S_m."""
    n = sum(lam)
    if not 0 <= m <= n or sum(nu) != n - m:
        raise SizeMismatchError(f"need |nu| = |lam| - m with 0 <= m <= {n}; got |nu|={sum(nu)}, m={m}")
    big = character_table(n)
    small = character_table(n - m)
    total = Fraction(0)
    for rho in small.partitions:
        chi_nu = small.value(nu, rho)
        if not chi_nu:
            continue
        for tau in partitions_of(m):
            total += Fraction(big.value(lam, union(rho, tau)) * chi_nu,
                              centralizer_order(rho) * centralizer_order(tau))
    return _as_integer(total, "restriction multiplicity")


def fixed_space_dimension(lam: Partition, m: int) -> int:
    """dim of the S_m-fixed vectors in sigma_lam, S_m permuting the first m letters."""
    n = sum(lam)
    if not 0 <= m <= n:
        raise SizeMismatchError(f"m={m} outside [0, {n}]")
    table = character_table(n)
    ones = Partition([1] * (n - m))
    total = sum(
        (Fraction(table.value(lam, union(tau, ones)), centralizer_order(tau)) for tau in partitions_of(m)),
        Fraction(0),
    )
    return _as_integer(total, "fixed-space dimension")

