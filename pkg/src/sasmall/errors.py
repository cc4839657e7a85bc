"""Exception hierarchy shared by every layer of the engine."""


class AlgebraError(Exception):
    """Base class for engine errors."""


class RingMismatch(AlgebraError):
    pass


class ParentMismatch(AlgebraError):
    pass


class InfiniteLattice(AlgebraError):
    pass


class InfiniteEnumeration(AlgebraError):
    pass


class BoundExceeded(AlgebraError):
    pass


class BadFactors(AlgebraError):
    pass


class ElementOutOfRange(AlgebraError):
    pass


class InfiniteQuotient(AlgebraError):
    pass


class Undecidable(AlgebraError):
    """A quantified predicate was asked about an infinite, non-line module."""


class ZeroT(AlgebraError):
    pass


class NotWellDefined(AlgebraError):
    pass


class NotEpi(AlgebraError):
    pass


class NotMCS(AlgebraError):
    pass


class ParseError(AlgebraError):
    pass
