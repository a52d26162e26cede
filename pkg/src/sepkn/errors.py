"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class BudgetError(RuntimeError):
    """The requested instance exceeds the configured search budget."""
