"""Kostant partition functions and magic multiplex juggling sequences."""

from .errors import DomainError, InvariantViolation

__all__ = ["DomainError", "InvariantViolation"]
__version__ = "0.1.0"
