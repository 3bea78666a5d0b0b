from app.core.config import settings, configure_logging
from app.core.errors import (
    WindowParseError,
    GroupMismatchError,
    TranspositionError,
    NotEvenSignedError,
    InvalidCodeError,
    InvalidBoundError,
    CapExceededError,
    UnknownStatisticError,
    UnknownTheoremError,
)

__all__ = [
    "settings",
    "configure_logging",
    "WindowParseError",
    "GroupMismatchError",
    "TranspositionError",
    "NotEvenSignedError",
    "InvalidCodeError",
    "InvalidBoundError",
    "CapExceededError",
    "UnknownStatisticError",
    "UnknownTheoremError",
]
