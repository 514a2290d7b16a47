"""Exception hierarchy shared by all charpflag modules."""


class CharpFlagError(Exception):
    """Base class for all library errors."""


class RankRangeError(CharpFlagError, ValueError):
    """Rank argument outside the supported range, or above the Weyl bound."""


class DatumMismatchError(CharpFlagError, ValueError):
    """Operands belong to different root data."""


class LatticeMembershipError(CharpFlagError, ValueError):
    """Coordinate vector is not a point of the datum's character lattice."""


class NonSimpleRootError(CharpFlagError, ValueError):
    """Operation requires a simple root."""


class UnsupportedDatumError(CharpFlagError, ValueError):
    """Operation is only implemented for type A (GL/SL) data."""


class NotPrimeError(CharpFlagError, ValueError):
    """A prime number was required."""


class WeightShapeError(CharpFlagError, ValueError):
    """Weight does not have the coordinate shape the operation expects."""


class DimensionMismatchError(CharpFlagError, ValueError):
    """Matrix dimensions incompatible with the lattice ranks."""


class InternalInconsistencyError(CharpFlagError, RuntimeError):
    """Two independent computations of the same value disagree.

    This signals an implementation bug, never a mathematical outcome.
    """
