"""Exception hierarchy.

Every error carries its class name as a stable identifier; the command line
prints it verbatim, so renaming a class is a breaking change.
"""


class TGRSError(Exception):
    """Base class for all errors raised by this package."""


# finite fields
class NotPrime(TGRSError, ValueError):
    pass


class NotIrreducible(TGRSError, ValueError):
    pass


class FieldMismatch(TGRSError, ValueError):
    pass


class DivisionByZero(TGRSError, ZeroDivisionError):
    pass


class NotASquare(TGRSError, ValueError):
    pass


class CharTwo(TGRSError, ValueError):
    pass


class FieldTooLarge(TGRSError, ValueError):
    pass


class NotSquarefree(TGRSError, ValueError):
    pass


class SearchBoundExceeded(TGRSError, RuntimeError):
    pass


# linear algebra and codes
class DimensionMismatch(TGRSError, ValueError):
    pass


class BoundExceeded(TGRSError, RuntimeError):
    pass


class NotSelfOrthogonal(TGRSError, ValueError):
    pass


class UnsupportedInstance(TGRSError, RuntimeError):
    pass


# twisted codes
class InvalidDimensions(TGRSError, ValueError):
    pass


class DuplicateAlpha(TGRSError, ValueError):
    pass


class ZeroV(TGRSError, ValueError):
    pass


class ShapeMismatch(TGRSError, ValueError):
    pass


class RankDeficient(TGRSError, ValueError):
    pass


class ZeroLeadingTwist(TGRSError, ValueError):
    pass


class CaseNotCovered(TGRSError, ValueError):
    pass


class BadSubset(TGRSError, ValueError):
    pass


# recipes
class ParamConstraintViolation(TGRSError, ValueError):
    pass


class PolynomialNotSquarefree(TGRSError, ValueError):
    pass


class RootsNotDistinct(TGRSError, ValueError):
    pass


class SplittingFieldTooLarge(TGRSError, ValueError):
    pass


class ClaimViolated(TGRSError, AssertionError):
    pass
