"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class InternalError(RuntimeError):
    """A runtime self-check failed; indicates a bug, not bad input."""
