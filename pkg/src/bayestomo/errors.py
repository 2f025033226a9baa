"""Exception types shared across the package."""


class BayestomoError(Exception):
    """Base class for package-specific errors."""


class ValidationError(BayestomoError, ValueError):
    """An object or argument violates one of its declared invariants."""


class ImpossibleDataError(BayestomoError):
    """Observed data has zero probability under the whole hypothesis space."""


class NotApplicableError(BayestomoError):
    """The requested diagnostic is undefined for this kind of input."""
