"""Exception hierarchy shared by all splitfields modules."""


class SplitfieldsError(Exception):
    """Base class for all library errors."""


class FieldMismatch(SplitfieldsError):
    """Operands belong to different fields."""


class NoEmbedding(SplitfieldsError):
    """No field embedding exists between the given fields."""


class PrimitiveElementError(SplitfieldsError):
    """No primitive element found within the documented multiplier range."""


class DimensionMismatch(SplitfieldsError):
    """Matrix/vector dimensions are incompatible."""


class NotSquare(SplitfieldsError):
    """A square matrix was required."""


class NotAGroup(SplitfieldsError):
    """A multiplication table fails one of the group axioms."""


class BadParams(SplitfieldsError):
    """Constructor parameters are invalid (e.g. quaternions in characteristic 2)."""


class NotAnIdeal(SplitfieldsError):
    """The given subspace is not a two-sided ideal."""


class ZeroQuotient(SplitfieldsError):
    """Quotient by the whole algebra was requested."""


class AlgebraMismatch(SplitfieldsError):
    """Modules over different algebras were combined."""


class NotInvariant(SplitfieldsError):
    """The given subspace is not closed under the algebra action."""


class NotSimple(SplitfieldsError):
    """A simple module was required."""


class Inconclusive(SplitfieldsError):
    """A randomized procedure hit its cap without a certificate."""


class TooLarge(SplitfieldsError):
    """The exhaustive oracle bound was exceeded."""


class NotOverE(SplitfieldsError):
    """The module cannot be written in the requested subfield on the given basis."""


class BadBasis(SplitfieldsError):
    """The supplied vectors are not a basis."""


class PreconditionFailed(SplitfieldsError):
    """A documented operation precondition does not hold."""


class DegreeCapExceeded(SplitfieldsError):
    """Splitting-field search exceeded the degree cap."""

    def __init__(self, message, tower=None):
        super().__init__(message)
        self.tower = tower or []


class InternalInvariantError(SplitfieldsError):
    """A mathematically guaranteed identity failed; always a bug."""


class InputError(SplitfieldsError):
    """Malformed document or CLI input."""
