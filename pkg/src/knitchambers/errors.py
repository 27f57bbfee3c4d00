"""Exception taxonomy shared across the package.

Exit-code mapping used by the CLI: input problems exit 2, internal
cross-check failures exit 3, resource caps exit 4.
"""

from __future__ import annotations


class KnitChambersError(Exception):
    """Base class for all package errors."""


class InvalidDiagramError(KnitChambersError, ValueError):
    """Unknown family or rank out of range for the family."""


class ConfigurationError(KnitChambersError, ValueError):
    """Retained-vertex list violates the configuration contract."""


class DomainError(KnitChambersError, ValueError):
    """A transform was applied outside its intended range."""


class SpecError(KnitChambersError, ValueError):
    """Problem-description parse failure, with a machine-readable code."""

    def __init__(self, code: str, message: str, field: str | None = None):
        super().__init__(message)
        self.code = code
        self.field = field


class NonterminationError(KnitChambersError, RuntimeError):
    """Knitting exceeded its step cap; message carries the trace."""


class InternalConsistencyError(KnitChambersError, RuntimeError):
    """An invariant that should be unbreakable was broken."""


class ConsistencyError(KnitChambersError, RuntimeError):
    """Cross-check between two independent computations failed."""


class ResourceBudgetError(KnitChambersError, RuntimeError):
    """A documented resource budget was exceeded."""
