"""Exception hierarchy shared by all modules."""


class RTMError(Exception):
    """Base class for errors raised by this package."""


class DomainError(RTMError, ValueError):
    """Argument outside the domain of a function."""


class SingularityError(DomainError):
    """Evaluation at a point where the function is singular."""


class ConfigurationError(RTMError, ValueError):
    """Invalid scene, geometry or run configuration."""


class NumericalAccuracyError(RTMError, ArithmeticError):
    """A quadrature failed to reach its accuracy target.

    Attributes
    ----------
    estimate : float
        The error estimate that exceeded the tolerance.
    """

    def __init__(self, message, estimate=float("nan")):
        super().__init__(message)
        self.estimate = estimate


class SolverError(RTMError, ArithmeticError):
    """Linear system is numerically singular or the solve did not converge."""

    def __init__(self, message, condition=float("nan")):
        super().__init__(message)
        self.condition = condition


class ContractError(RTMError, ValueError):
    """Inputs violate a shape or consistency contract between stages."""


class FormatError(RTMError, ValueError):
    """A file does not follow the expected text format."""


class DegenerateRangeError(RTMError, ValueError):
    """A field has a constant value and cannot be rescaled."""
