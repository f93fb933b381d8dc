"""Exception types shared by every module."""


class FlawshiftError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(FlawshiftError):
    """Raised when path text contains a character other than U, D, 1 or 0."""

    def __init__(self, index: int, char: str, text: str = ""):
        self.index = index
        self.char = char
        super().__init__(f"invalid step character {char!r} at index {index}")


class DomainError(FlawshiftError):
    """The argument lies outside the domain of the operation."""


class NoSuccessor(FlawshiftError):
    """Forward map applied to a path that already has the maximal number of flaws."""


class NoPredecessor(FlawshiftError):
    """Backward map applied to a path with zero flaws."""
