"""Exception types raised by state constructors and bound evaluators."""


class ValidationError(ValueError):
    """A state or probability vector violates one of its invariants."""


class GridTooSmallError(ValidationError):
    """Wavefunction amplitude at the grid boundary exceeds the tail tolerance."""


class NonNormalizableError(ValidationError):
    """Requested Gaussian exponent is not square integrable."""


class DomainError(ValueError):
    """Argument outside the documented domain of a closed-form evaluator."""


class TruncationError(DomainError):
    """Requested purity needs a Fock support larger than the level budget."""


class DegenerateInputError(ValueError):
    """An observable has zero variance where a positive one is required."""


class ThirdObservableDeterministicError(DegenerateInputError):
    """The third observable's variance is too small to divide by."""


class WrongRegimeError(ValueError):
    """Commuting-third evaluator called with non-commuting observables."""


class IncompatibleRepresentationError(TypeError):
    """State and observables do not share a representation."""


class QuadratureAccuracyError(RuntimeError):
    """Numerical integration drifted beyond the accepted tolerance."""
