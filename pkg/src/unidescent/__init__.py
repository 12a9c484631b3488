"""Exact GGP multiplicities, first descents and theta lifts for unipotent
representations of finite unitary groups, computed from partition combinatorics
and symmetric-group characters."""

__version__ = "0.1.0"

from .dlmult import (
    CaseTag,
    InducedDatum,
    MultiplicityResult,
    closed_form,
    dl_multiplicity,
    induced_multiplicity,
    inner_sum,
    unipotent_decomposition,
)
from .errors import (
    CacheError,
    ContainmentError,
    OracleBoundError,
    ParityError,
    PartitionParseError,
    SizeMismatchError,
    UnidescentError,
    VerificationError,
)
from .ggp import (
    DescentResult,
    Model,
    ThetaLift,
    bessel_multiplicity,
    descend,
    first_occurrence_pair,
    fj_multiplicity,
    theta_lift,
    theta_multiplicity,
)
from .partitions import Partition, parse_partition, partitions_of, transpose
from .symchar import CharacterTable, character_table, mn_character, oracle_character

__all__ = [name for name in dir() if not name.startswith("_")]
