"""Exception types shared across the package."""


class VbttaError(Exception):
    """Base class for all package errors."""


class DomainError(VbttaError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DegenerateInputError(VbttaError, ValueError):
    """Input is structurally valid but degenerate (e.g. singular covariance)."""


class ConfigurationError(VbttaError, ValueError):
    """A configuration file or run setup is inconsistent."""


class EvaluationError(VbttaError, ArithmeticError):
    """A user-supplied function returned a non-finite value."""


class NumericalError(VbttaError, ArithmeticError):
    """A numerical routine produced a non-finite or unusable result."""


class DivergenceError(NumericalError):
    """An iterative optimisation diverged."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
