"""Young-diagram and multiset calculus on integer partitions.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers. It labels three things at once: unipotent representations of
U_n(F_q), torus types, and conjugacy classes of S_n.  All enumerations in
this module use a fixed order so that output and caches are reproducible.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator

from .errors import ContainmentError, PartitionParseError

__all__ = [
    "Partition",
    "parse_partition",
    "transpose",
    "remove_first_column",
    "remove_first_row",
    "add_first_column",
    "union",
    "contains",
    "sub_multisets",
    "binom_embeddings",
    "centralizer_order",
    "class_size",
    "perm_sign",
    "is_close",
    "is_even",
    "meet",
    "is_2transverse",
    "is_transverse",
    "partitions_of",
    "staircase",
]


class Partition(tuple):
    """Weakly decreasing sequence of positive integers.

    >>> Partition([3, 1, 1])
    Partition(3, 1, 1)
    >>> str(Partition([]))
    '[]'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiset(cls, parts: Iterable[int]) -> "Partition":
        """Sort ``parts`` decreasingly and drop zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self[0] if self else 0

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "[]"


def parse_partition(text: str) -> Partition:
    """Parse the canonical text form: ``"3,2,1"``, or ``"[]"`` for the empty partition.

    Surrounding brackets and whitespace are tolerated (``"[3, 2, 1]"``).
    """
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    if not s:
        return Partition()
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise PartitionParseError(f"not a partition: {text!r}") from None
    try:
        return Partition(parts)
    except ValueError as exc:
        raise PartitionParseError(f"not a partition: {text!r} ({exc})") from None


def transpose(lam: Partition) -> Partition:
    """Conjugate diagram: column lengths become row lengths."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def remove_first_column(lam: Partition) -> Partition:
    return Partition(p - 1 for p in lam if p > 1)


def remove_first_row(lam: Partition) -> Partition:
    return Partition(lam[1:])


def add_first_column(lam: Partition, height: int) -> Partition:
    """Glue a column of ``height`` boxes to the left of ``lam``; needs height >= rows."""
    if height < len(lam):
        raise ValueError(f"column of height {height} is shorter than {lam}")
    return Partition([p + 1 for p in lam] + [1] * (height - len(lam)))


def union(alpha: Partition, beta: Partition) -> Partition:
    """Multiset union of parts."""
    return Partition(sorted(alpha + beta, reverse=True))


def contains(sub: Partition, lam: Partition) -> bool:
    """True iff ``sub`` is a sub-multiset of ``lam``."""
    have = Counter(lam)
    return all(have[v] >= c for v, c in Counter(sub).items())


def sub_multisets(lam: Partition) -> Iterator[Partition]:
    """Every distinct sub-multiset of ``lam`` once, by size, then lexicographically descending."""
    mult = sorted(Counter(lam).items(), reverse=True)
    found = []
    for counts in product(*(range(c + 1) for _, c in mult)):
        parts: list[int] = []
        for (value, _), c in zip(mult, counts):
            parts.extend([value] * c)
        found.append(Partition(parts))
    # equal sizes never share a proper prefix, so negating sorts each size class descending
    found.sort(key=lambda p: (p.size, tuple(-x for x in p)))
    yield from found


def binom_embeddings(lam: Partition, sub: Partition) -> int:
    """Number of ways to embed ``sub`` in ``lam`` as labelled parts: prod_i C(a_i, b_i)."""
    have = Counter(lam)
    want = Counter(sub)
    if any(have[v] < c for v, c in want.items()):
        raise ContainmentError(f"{sub} is not a sub-multiset of {lam}")
    out = 1
    for v, c in want.items():
        out *= comb(have[v], c)
    return out


@lru_cache(maxsize=None)
def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_j j^{m_j} m_j!, the order of the S_n-centralizer of a class-mu permutation."""
    z = 1
    for part, m in Counter(mu).items():
        z *= part**m * factorial(m)
    return z


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def perm_sign(mu: Partition) -> int:
    """Sign of a permutation with cycle type ``mu``: (-1)^(n - rows)."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def _padded(mu: Partition, nu: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    width = max(len(mu), len(nu))
    return (tuple(mu) + (0,) * (width - len(mu)), tuple(nu) + (0,) * (width - len(nu)))


def is_close(mu: Partition, nu: Partition) -> bool:
    a, b = _padded(mu, nu)
    return all(abs(x - y) <= 1 for x, y in zip(a, b))


def is_even(mu: Partition) -> bool:
    return all(c % 2 == 0 for c in Counter(mu).values())


def meet(mu: Partition, nu: Partition) -> Partition:
    """Index-wise common parts of the zero-padded sequences, zeros dropped."""
    a, b = _padded(mu, nu)
    return Partition(x for x, y in zip(a, b) if x == y and x)


def is_2transverse(mu: Partition, nu: Partition) -> bool:
    return is_close(mu, nu) and is_even(meet(mu, nu))


def is_transverse(mu: Partition, nu: Partition) -> bool:
    return is_close(mu, nu) and not meet(mu, nu)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order ([n] first, [1^n] last)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _partitions(n, n)


def staircase(k: int) -> Partition:
    """[k, k-1, ..., 1], the label of the unipotent cuspidal representation of U_{k(k+1)/2}."""
    return Partition(range(k, 0, -1))
