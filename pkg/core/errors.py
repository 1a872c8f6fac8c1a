"""Exceptions raised by the toolkit."""


class HunterError(Exception):
    """Base class for every domain error."""


class InputError(HunterError, ValueError):
    """An argument is out of range or malformed."""


class ParseError(InputError):
    """A text instance could not be parsed."""

    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class PreconditionError(HunterError):
    """An operation was called on a graph that does not meet its precondition."""


class UnsupportedError(HunterError):
    """The request is valid in principle but not implemented."""
