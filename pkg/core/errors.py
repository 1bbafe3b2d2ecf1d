# core/errors.py

"""
Error hierarchy shared by every module.

Expected negative outcomes (Jacobi failure, failed identity checks,
"no solution") are reported through result dataclasses, not raised.
"""


class LieAmkError(Exception):
    """Base class for all kernel errors."""


class InputError(LieAmkError):
    """Malformed input: bad index, bad rational, bad fixture file."""

    def __init__(self, message: str, context: str = ""):
        self.context = context
        super().__init__(f"{context}: {message}" if context else message)


class InvariantViolation(LieAmkError):
    """An internal consistency re-check failed."""


class PreconditionError(LieAmkError):
    """An operation was called outside its precondition."""


class TruncationOverflow(LieAmkError):
    """A product or action would leave the truncation window."""

    def __init__(self, needed: int, limit: int, what: str = "product"):
        self.needed = needed
        self.limit = limit
        super().__init__(
            f"{what} needs degree {needed} but the truncation is {limit}"
        )
