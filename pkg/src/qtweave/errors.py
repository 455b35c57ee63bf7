"""Exception types shared across the package.

The CLI maps these onto exit codes: VerificationError -> 1,
ParameterError -> 2, BudgetExceededError -> 3.
"""


class ParameterError(ValueError):
    """A precondition on user-supplied parameters is violated."""


class BudgetExceededError(RuntimeError):
    """An exact enumeration would exceed the configured budget."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class VerificationError(RuntimeError):
    """A computed object fails a property it is required to satisfy."""
