"""Multiplicities of unipotent representations against Deligne-Lusztig terms.

Everything here is a finite exact sum over partitions.  A unipotent pi_lambda of
U_n(F_q) is expanded over the class-indexed terms R_{T_mu,1} with coefficient
sigma_lambda(w_mu)/z_mu; the twist by the longest Weyl element disappears once
the torus is labelled by the cycle type of w*w0 instead of w.

Global signs that depend only on the ambient data (the rank of the torus
block attached to the cuspidal datum, the +-1 relating pi_lambda and R_lambda)
are never evaluated: the engine works with the sign-stripped sum and reports
multiplicities as absolute values.  The sign that varies with the torus type
of the U_m block is kept, because it does not factor out of the induced sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ParityError, SizeMismatchError
from .partitions import (
    Partition,
    binom_embeddings,
    centralizer_order,
    partitions_of,
    perm_sign,
    remove_first_column,
    sub_multisets,
    transpose,
    union,
)
from .symchar import character_table

__all__ = [
    "VirtualUnipotentChar",
    "unipotent_decomposition",
    "inner_sum",
    "dl_multiplicity",
    "closed_form",
    "InducedDatum",
    "CaseTag",
    "MultiplicityResult",
    "induced_multiplicity",
]


@dataclass(frozen=True)
class VirtualUnipotentChar:
    """Coefficients of pi_lambda on the terms R_{T_mu,1}, mu ranging over partitions of n."""

    n: int
    coeff: dict[Partition, Fraction]

    def norm(self) -> Fraction:
        """sum_mu z_mu coeff(mu)^2; equals 1 for an irreducible label."""
        return sum((centralizer_order(mu) * c * c for mu, c in self.coeff.items()), Fraction(0))


def unipotent_decomposition(lam: Partition) -> VirtualUnipotentChar:
    n = sum(lam)
    table = character_table(n)
    return VirtualUnipotentChar(
        n, {mu: Fraction(table.value(lam, mu), centralizer_order(mu)) for mu in table.partitions}
    )


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num}/{den} is not an integer")
    return q


@lru_cache(maxsize=None)
def _inner_sum(lam: Partition, mu_prime: Partition) -> int:
    n = sum(lam)
    table = character_table(n)
    lam_t = transpose(lam)
    n_fact = factorial(n)
    z_prime = centralizer_order(mu_prime)
    total = 0
    for mu_star in partitions_of(n - sum(mu_prime)):
        chi = table.value(lam_t, union(mu_prime, mu_star))
        if chi:
            # class size of [mu', mu*] times the number of ways mu' sits inside it
            total += _exact_div(n_fact, z_prime * centralizer_order(mu_star), "class count") * chi
    return total


def inner_sum(lam: Partition, mu_prime: Partition) -> int:
    """sum over mu* |- n-|mu'| of n!/(z_mu' z_mu*) * sigma_{lam^t}(w_[mu', mu*])."""
    if sum(mu_prime) > sum(lam):
        raise SizeMismatchError(f"|{mu_prime}| exceeds |{lam}|")
    return _inner_sum(Partition(lam), Partition(mu_prime))


@lru_cache(maxsize=None)
def _dl_multiplicity(lam: Partition, mu2: Partition) -> int:
    n = sum(lam)
    total = 0
    for mu_prime in sub_multisets(mu2):
        term = binom_embeddings(mu2, mu_prime) * centralizer_order(mu_prime) * _inner_sum(lam, mu_prime)
        total += -term if (n - sum(mu_prime)) % 2 else term
    return _exact_div(total, factorial(n), "Deligne-Lusztig pairing")


def dl_multiplicity(lam: Partition, mu2: Partition) -> int:
    """Sign-stripped pairing of R_{T1 x T2, theta (x) 1} on U_{n+1} with R_lam on U_n.

    ``mu2`` is the torus type of the block on which the character is trivial.
    The true pairing is this value times (-1)^rk(T).
    """
    if sum(mu2) > sum(lam):
        raise SizeMismatchError(f"|{mu2}| exceeds |{lam}|")
    return _dl_multiplicity(Partition(lam), Partition(mu2))


def closed_form(lam: Partition, mu2: Partition) -> int:
    """sigma_{t(lam')}(w_mu2) with lam' = lam minus its first column; requires |mu2| = n - rows."""
    n, k = sum(lam), len(lam)
    if sum(mu2) != n - k:
        raise SizeMismatchError(f"closed form needs |mu2| = {n - k}, got {sum(mu2)}")
    return character_table(n - k).value(transpose(remove_first_column(lam)), Partition(mu2))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InducedDatum:
    """Parabolic datum GL_ell(F_{q^2}) x U_m with a cuspidal tau on the first factor.

    tau enters the computation only through ell; its own torus contributes a
    global sign, which is discarded.
    """

    ell: int
    nu: Partition

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError(f"ell must be positive, got {self.ell}")


class CaseTag(str, Enum):
    VANISHING_BELOW = "vanishing_below"
    FIRST_DESCENT = "first_descent"
    FORMULA_ONLY = "formula_only"


@dataclass(frozen=True)
class MultiplicityResult:
    raw: int
    value: int
    covered: bool
    case_tag: CaseTag

    def to_json(self) -> dict:
        return {"raw": self.raw, "value": self.value, "covered": self.covered, "case": self.case_tag.value}

    @classmethod
    def from_json(cls, data: dict) -> "MultiplicityResult":
        return cls(int(data["raw"]), int(data["value"]), bool(data["covered"]), CaseTag(data["case"]))


def bessel_case(n: int, k: int, m: int) -> tuple[bool, CaseTag]:
    if m < n - k:
        return True, CaseTag.VANISHING_BELOW
    if k % 2 == 1 and m == n - k:
        return True, CaseTag.FIRST_DESCENT
    return False, CaseTag.FORMULA_ONLY


@lru_cache(maxsize=None)
def _induced_raw(lam: Partition, nu: Partition) -> int:
    m = sum(nu)
    small = character_table(m)
    m_fact = factorial(m)
    total = 0
    for mu2 in small.partitions:
        chi = small.value(nu, mu2)
        if not chi:
            continue
        pairing = dl_multiplicity(lam, mu2)
        if pairing:
            # (-1)^rk of the class-mu2 torus is the sign of a class-mu2 permutation
            total += (m_fact // centralizer_order(mu2)) * chi * perm_sign(mu2) * pairing
    return _exact_div(total, m_fact, "induced multiplicity")


def induced_multiplicity(lam: Partition, datum: InducedDatum) -> MultiplicityResult:
    """<I_P^{U_{n+1}}(tau (x) pi_nu), pi_lam> restricted to U_n, up to a global sign."""
    lam, nu = Partition(lam), Partition(datum.nu)
    n, m, k = sum(lam), sum(nu), len(lam)
    if n + 1 != m + 2 * datum.ell:
        raise ParityError(f"need n + 1 = m + 2*ell; got n={n}, m={m}, ell={datum.ell}")
    raw = _induced_raw(lam, nu)
    covered, tag = bessel_case(n, k, m)
    return MultiplicityResult(raw, abs(raw), covered, tag)


def clear_caches() -> None:
    for fn in (_inner_sum, _dl_multiplicity, _induced_raw):
        fn.cache_clear()

