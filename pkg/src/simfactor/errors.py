"""Exception hierarchy shared by all simfactor modules."""


class SimfactorError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SimfactorError):
    """Malformed matrix file, certificate file, or field name."""


class DimensionMismatchError(SimfactorError):
    """Operands have incompatible shapes."""


class FieldMismatchError(SimfactorError):
    """Operands live over different fields."""


class SingularMatrixError(SimfactorError):
    """A matrix required to be invertible is singular."""


class NotNilpotentError(SimfactorError):
    """Input to a nilpotent-only routine is not nilpotent."""


class NotSemisimpleAtZeroError(SimfactorError):
    """Kernel and image of the input do not span the whole space."""


class NotIdempotentError(SimfactorError):
    """A matrix required to satisfy E*E = E does not."""


class RankMismatchError(SimfactorError):
    """Input rank violates the rank expected by the current stage."""


class InvalidRankError(SimfactorError):
    """Rank is zero or full where a proper intermediate rank is required."""


class RankTooHighError(SimfactorError):
    """Target rank exceeds the rank of the base matrix."""


class NotSingularError(SimfactorError):
    """The base matrix must be singular."""


class FieldNotFiniteError(SimfactorError):
    """Exhaustive enumeration requires a finite field."""


class TooLargeError(SimfactorError):
    """Enumeration size exceeds the configured cap."""
