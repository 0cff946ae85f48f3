"""Exception types shared by the library and the command line front end."""


class AbelCodesError(Exception):
    """Base class for every error raised by :mod:`abelcodes`."""


class ValidationError(AbelCodesError, ValueError):
    """Input violates a documented precondition (bad shape, non orbit-closed set, ...)."""


class ZeroCodeError(ValidationError):
    """Operation is undefined for the zero code / zero hypermatrix."""


class BudgetExceeded(AbelCodesError):
    """An exhaustive computation would exceed its explicit budget."""

    def __init__(self, message: str, required: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class EngineMismatch(AbelCodesError):
    """The hypermatrix engine and a brute-force oracle disagree."""
