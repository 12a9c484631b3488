"""Exception hierarchy shared by the engines and the command line."""


class UnidescentError(Exception):
    """Base class for every error raised by this package."""


class PartitionParseError(UnidescentError, ValueError):
    pass


class ContainmentError(UnidescentError, ValueError):
    """A sub-multiset relation required by a formula does not hold."""


class SizeMismatchError(UnidescentError, ValueError):
    pass


class OracleBoundError(UnidescentError, ValueError):
    pass


class ParityError(UnidescentError, ValueError):
    """Group sizes do not fit the requested model (Bessel needs n-m odd, FJ even)."""


class VerificationError(UnidescentError):
    """A computed multiplicity contradicts the value a theorem pins down."""


class CacheError(UnidescentError, OSError):
    pass
