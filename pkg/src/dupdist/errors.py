"""Exception hierarchy shared across the package."""

from __future__ import annotations


class DupdistError(Exception):
    """Base class for all package-specific errors."""


class DomainError(DupdistError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class StepBoundsError(DomainError):
    """A duplication step violates the position/length/transposition bounds."""


class InvalidDecompositionError(DomainError):
    """A decomposition does not describe a removable duplicated block."""


class CertificateError(DupdistError):
    """A certificate or quadruple sequence fails to replay.

    ``step_index`` is the 0-based index of the offending step, or None when
    the failure is not tied to a single step.
    """

    def __init__(self, message: str, step_index: int | None = None):
        super().__init__(message if step_index is None
                         else f"step {step_index}: {message}")
        self.step_index = step_index


class ResourceBudgetError(DupdistError):
    """A search or table build exceeded its configured budget.

    Carries whatever partial knowledge was available when the budget ran out
    so callers can report best-effort bounds.
    """

    def __init__(
        self,
        message: str,
        *,
        states_explored: int | None = None,
        largest_completed_n: int | None = None,
        best_lower_bound: int | None = None,
        best_upper_bound: int | None = None,
    ):
        super().__init__(message)
        self.states_explored = states_explored
        self.largest_completed_n = largest_completed_n
        self.best_lower_bound = best_lower_bound
        self.best_upper_bound = best_upper_bound
