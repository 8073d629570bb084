"""Exception types shared across the package."""


class YdomError(Exception):
    """Base class for package errors."""


class BudgetExceededError(YdomError):
    """A search ran past its configured budget.

    ``fallback`` carries a valid upper bound for the quantity being
    minimized, when one is known.
    """

    def __init__(self, message, fallback=None):
        super().__init__(message)
        self.fallback = fallback


class LimitExceededError(YdomError):
    """An instance is larger than the hard limit of an exhaustive method."""
