"""Gan-Gross-Prasad layer: Bessel and Fourier-Jacobi multiplicities, theta lifts, descents.

Only unipotent labels (partitions) are accepted.  The Bessel side is computed
from the Deligne-Lusztig engine in :mod:`unidescent.dlmult`; the
Fourier-Jacobi side is either read off the theorem (``declarative``) or
computed through the see-saw identity, which turns it into a sum of Bessel
multiplicities over a theta lift (``seesaw``).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .dlmult import CaseTag, InducedDatum, MultiplicityResult, induced_multiplicity
from .errors import ParityError, VerificationError
from .partitions import (
    Partition,
    is_2transverse,
    partitions_of,
    remove_first_column,
    transpose,
    union,
)

__all__ = [
    "Model",
    "ThetaLift",
    "theta_multiplicity",
    "theta_lift",
    "bessel_multiplicity",
    "fj_multiplicity",
    "fj_case",
    "DescentResult",
    "descend",
    "FirstOccurrence",
    "first_occurrence_pair",
    "VERIFY_DESCENT_MAX_N",
]

VERIFY_DESCENT_MAX_N = 10


class Model(str, Enum):
    BESSEL = "bessel"
    FOURIER_JACOBI = "fj"


@dataclass(frozen=True)
class ThetaLift:
    source: Partition
    target_size: int
    components: tuple[Partition, ...]

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "target": self.target_size,
            "components": [str(p) for p in self.components],
        }


def theta_multiplicity(lam: Partition, lam2: Partition) -> int:
    """Multiplicity of pi_lam (x) pi_lam2 in the Weil representation of U_n x U_n'."""
    return 1 if is_2transverse(transpose(lam), transpose(lam2)) else 0


def theta_lift(lam: Partition, target: int) -> ThetaLift:
    if target < 0:
        raise ValueError(f"target size must be nonnegative, got {target}")
    lam = Partition(lam)
    lam_t = transpose(lam)
    comps = tuple(p for p in partitions_of(target) if is_2transverse(lam_t, transpose(p)))
    return ThetaLift(lam, target, comps)


def bessel_multiplicity(lam: Partition, nu: Partition) -> MultiplicityResult:
    n, m = sum(lam), sum(nu)
    if not (n > m and (n - m) % 2 == 1):
        raise ParityError(f"Bessel model needs n > m with n - m odd; got n={n}, m={m}")
    return induced_multiplicity(lam, InducedDatum((n - m + 1) // 2, Partition(nu)))


def fj_case(n: int, k: int, m: int) -> tuple[bool, CaseTag]:
    if m < n - k:
        return True, CaseTag.VANISHING_BELOW
    if k % 2 == 0 and m == n - k:
        return True, CaseTag.FIRST_DESCENT
    return False, CaseTag.FORMULA_ONLY


def _seesaw_value(lam: Partition, nu: Partition, mu0: int | None) -> int:
    floor = max(lam.first, nu.first)
    if mu0 is None:
        mu0 = floor
    elif mu0 < floor:
        raise ValueError(f"mu0 must be at least max(lam_1, nu_1) = {floor}, got {mu0}")
    mu_star = union(Partition([mu0]), nu)
    lifted = theta_lift(lam, sum(lam) + mu0 + 1)
    return sum(bessel_multiplicity(tilde, mu_star).value for tilde in lifted.components)


def fj_multiplicity(
    lam: Partition, nu: Partition, mode: str = "declarative", mu0: int | None = None
) -> MultiplicityResult:
    """Fourier-Jacobi multiplicity m(pi_lam, pi_nu) for n > m, n - m even.

    ``declarative`` returns the theorem's value where one applies and falls
    back to the see-saw computation elsewhere (flagged ``formula_only``).
    ``seesaw`` always computes sum over lam~ in Theta_{n, n+mu0+1}(pi_lam) of
    the Bessel multiplicity m(pi_lam~, pi_[mu0, nu]).
    """
    lam, nu = Partition(lam), Partition(nu)
    n, m, k = sum(lam), sum(nu), len(lam)
    if not (n > m and (n - m) % 2 == 0):
        raise ParityError(f"Fourier-Jacobi model needs n > m with n - m even; got n={n}, m={m}")
    if mode not in ("declarative", "seesaw"):
        raise ValueError(f"unknown mode {mode!r}")
    covered, tag = fj_case(n, k, m)
    if mode == "declarative" and covered:
        value = int(tag is CaseTag.FIRST_DESCENT and nu == remove_first_column(lam))
        return MultiplicityResult(value, value, True, tag)
    value = _seesaw_value(lam, nu, mu0)
    return MultiplicityResult(value, value, covered, tag)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DescentResult:
    model: Model
    source: Partition
    ell0: int | None
    ell0_bound: int
    descent: Partition | None
    determined: bool
    verified: bool = False

    def to_json(self) -> dict:
        return {
            "model": self.model.value,
            "partition": str(self.source),
            "ell0": self.ell0,
            "ell0_bound": self.ell0_bound,
            "descent": None if self.descent is None else str(self.descent),
            "determined": self.determined,
            "verified": self.verified,
        }

    @classmethod
    def from_json(cls, data: dict) -> "DescentResult":
        from .partitions import parse_partition

        return cls(
            Model(data["model"]),
            parse_partition(data["partition"]),
            data["ell0"],
            data["ell0_bound"],
            None if data["descent"] is None else parse_partition(data["descent"]),
            data["determined"],
            data["verified"],
        )


def _level_size(model: Model, n: int, ell: int) -> int:
    return n - 2 * ell - 1 if model is Model.BESSEL else n - 2 * ell


def _mult(model: Model, lam: Partition, nu: Partition) -> MultiplicityResult:
    if model is Model.BESSEL:
        return bessel_multiplicity(lam, nu)
    return fj_multiplicity(lam, nu, mode="seesaw")


def _verify_descent(model: Model, lam: Partition, ell0: int, target: Partition) -> None:
    n = sum(lam)
    ell = ell0
    while True:
        m = _level_size(model, n, ell)
        if m < 0 or m >= n:
            break
        for nu in partitions_of(m):
            expected = int(ell == ell0 and nu == target)
            got = _mult(model, lam, nu).value
            if got != expected:
                raise VerificationError(
                    f"{model.value} multiplicity m({lam}, {nu}) = {got} at level {ell}, expected {expected}"
                )
        ell += 1


def descend(lam: Partition, model: Model | str, verify: bool | None = None) -> DescentResult:
    """First occurrence index and first descent of pi_lam.

    Determined for Bessel when the number of rows k is odd, for
    Fourier-Jacobi when k is even; otherwise only the bound on ell0 is known.
    With ``verify`` (default: n <= 10) the multiplicity engine is swept over
    every unipotent nu at level ell0 and above and must reproduce the answer.
    """
    lam = Partition(lam)
    model = Model(model)
    k, n = len(lam), sum(lam)
    if k == 0:
        raise ValueError("U_0 has no descent")
    if model is Model.BESSEL:
        bound, determined = (k - 1) // 2, k % 2 == 1
    else:
        bound, determined = k // 2, k % 2 == 0
    if not determined:
        return DescentResult(model, lam, None, bound, None, False)
    target = remove_first_column(lam)
    if verify is None:
        verify = n <= VERIFY_DESCENT_MAX_N
    if verify:
        _verify_descent(model, lam, bound, target)
    return DescentResult(model, lam, bound, bound, target, True, bool(verify))


class FirstOccurrence(NamedTuple):
    bessel: DescentResult
    fourier_jacobi: DescentResult
    rows: int


def first_occurrence_pair(lam: Partition, verify: bool | None = None) -> FirstOccurrence:
    """Both descents, plus k recovered as max(2 ell0_B + 1, 2 ell0_FJ)."""
    b = descend(lam, Model.BESSEL, verify)
    fj = descend(lam, Model.FOURIER_JACOBI, verify)
    k = max(2 * b.ell0_bound + 1, 2 * fj.ell0_bound)
    if k != len(lam):
        raise VerificationError(f"row count {len(lam)} not recovered from first occurrence indices ({k})")
    return FirstOccurrence(b, fj, k)
