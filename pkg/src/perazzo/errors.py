"""Exception types shared across the package."""


class PerazzoError(Exception):
    """Base class for errors raised by this package."""


class ParseError(PerazzoError):
    """Malformed polynomial text.  Carries the offset of the offending token."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class GuardError(PerazzoError):
    """A computation was refused because it exceeds the desk-scale guard."""


class InternalError(PerazzoError):
    """An internal invariant was violated; indicates a bug, not bad input."""
