"""Exception hierarchy shared by every module of the package."""


class SubregError(ValueError):
    """Base class for all domain errors raised by :mod:`subreg`."""


class DiagramError(SubregError):
    pass


class AsymmetricWeights(DiagramError):
    pass


class DiagonalNotOne(DiagramError):
    pass


class WeightBelowTwo(DiagramError):
    pass


class DuplicateLabel(DiagramError):
    pass


class DiagramParseError(DiagramError):
    pass


class ConsecutiveLetter(SubregError):
    pass


class BoundaryMismatch(SubregError):
    pass


class NotSubregular(SubregError):
    pass


class SupportMismatch(SubregError):
    pass


class DiagramMismatch(SubregError):
    pass


class NotIrreducible(SubregError):
    pass


class NotAWalk(SubregError):
    pass


class GraphMismatch(SubregError):
    pass


class NotSimplyLaced(SubregError):
    pass


class WeightNotOddFinite(SubregError):
    pass


class NotOddlyConnected(SubregError):
    pass


class IndexOutOfRange(SubregError):
    pass


class InvalidN(SubregError):
    pass


class NotInBox(SubregError):
    pass


class InvalidLetter(SubregError):
    pass


class BallTooLarge(SubregError):
    pass


class BallOverflow(SubregError):
    pass


class NotFusionRing(SubregError):
    pass


class SuiteMismatch(SubregError):
    """A verification suite does not apply to the given diagram."""
