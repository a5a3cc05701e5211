"""Shared exception types."""


class ToolError(Exception):
    """Base class for every error raised by this package."""


class InputError(ToolError):
    """Malformed or inconsistent input: bad context, bad file, violated precondition."""


class ParseError(InputError):
    """Expression syntax error; carries the offset of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ResourceLimitError(ToolError):
    """A computation exceeded its configured step budget."""
