"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagree."""
