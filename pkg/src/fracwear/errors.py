"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A parameter or configuration value violates a model assumption."""


class ConvergenceError(RuntimeError):
    """A numerical procedure failed to reach its accuracy contract."""


class ConsistencyError(RuntimeError):
    """Two independent evaluation routes disagree beyond tolerance."""


class UnsupportedLimitError(ValidationError):
    """Parameter combination whose limiting form is not defined (mu = 0 with alpha != 1)."""
