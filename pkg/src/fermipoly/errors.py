"""Exception types shared by every module."""


class PreconditionError(ValueError):
    """An argument lies outside the range where an operation is defined."""


class DomainError(PreconditionError):
    """A numeric argument is outside the mathematical domain (e.g. log of a non-positive)."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
