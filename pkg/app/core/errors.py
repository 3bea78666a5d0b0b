"""
Error vocabulary. Every domain error is a ValueError so that callers (routers, CLI)
can treat bad input uniformly.
"""


class WindowParseError(ValueError):
    """Window text or window data does not describe a colored permutation."""


class GroupMismatchError(ValueError):
    """Two operands live in different groups (r or n disagree)."""


class TranspositionError(ValueError):
    """Transposition indices or color out of range."""


class NotEvenSignedError(ValueError):
    """A type-D operation received something outside D(n)."""


class InvalidCodeError(ValueError):
    """A code lies outside CS(r,n) or SE(n,D)."""


class InvalidBoundError(ValueError):
    """A Ferrers bound is not nondecreasing, infeasible, or has the wrong size."""


class CapExceededError(ValueError):
    """A requested enumeration is larger than the configured cap."""


class UnknownStatisticError(ValueError):
    """A weighting refers to a statistic that does not exist."""


class UnknownTheoremError(ValueError):
    """A theorem id outside the known vocabulary."""
