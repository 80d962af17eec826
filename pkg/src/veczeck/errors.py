"""Exception types shared across the package."""


class KBonacciError(Exception):
    """Base class for domain errors raised by this package."""


class IndexOutOfDomain(KBonacciError):
    """A sequence index lies outside the defined domain."""


class NotSatisfying(KBonacciError):
    """An index set violates the satisfying-representation constraints."""


class ZeroVector(KBonacciError):
    """The zero vector was passed where a nonzero vector is required."""


class JBoundTooSmall(KBonacciError):
    """A greedy reconstruction failed because the supplied index bound is too small."""


class NormalizationDiverged(KBonacciError):
    """Carry normalization exceeded its rewrite budget.  Signals a bug."""


class NotFound(KBonacciError):
    """Exhaustive search found no representation within the given bound."""


class MultipleFound(KBonacciError):
    """Exhaustive search found two representations of the same vector.

    This would falsify uniqueness and must never occur.
    """


class StrategyMismatch(KBonacciError):
    """Two solver strategies returned different representations for one vector."""


class ConvergenceFailure(KBonacciError):
    """A numeric estimate did not stabilize to the requested tolerance."""


class ReconstructionMismatch(KBonacciError):
    """Closed-form reconstruction disagreed with the exact integer sequence."""


class DivisionByNonUnit(KBonacciError):
    """Power-series division requires a unit (nonzero) constant term."""
