"""Shared exception types."""


class SusaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SusaError, ValueError):
    """Malformed sexagesimal text.

    `position` is the 0-based character offset of the offending input.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MissingSurrogateError(SusaError, KeyError):
    """An approximation context was asked for a symbol it does not define."""

    def __str__(self) -> str:  # KeyError would repr() the message
        return self.args[0] if self.args else ""
