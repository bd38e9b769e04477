"""Exception hierarchy shared by every module."""


class GiftcountError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(GiftcountError, ValueError):
    """An argument violates a documented precondition."""


class GuardError(GiftcountError):
    """A resource guard refused to start an expensive computation.

    ``guard`` names the bound that was exceeded, so callers (the CLI in
    particular) can report it.
    """

    def __init__(self, guard, value, limit):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(f"resource guard '{guard}' exceeded: {value} > {limit}")


class InconsistencyError(GiftcountError, ArithmeticError):
    """An exact formula produced a value it never should (non-integral, negative).

    These signal a coding or transcription bug, not a bad input.
    """


class SingularityError(GiftcountError, ZeroDivisionError):
    """A recurrence's leading coefficient vanishes inside the requested range."""
