"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the domain of the requested operation."""


class InvariantViolation(RuntimeError):
    """Two routes that must agree disagreed; indicates an implementation bug."""
