"""Exception hierarchy shared by every module of the package."""


class SmallKnotsError(ValueError):
    """Base class for all domain errors raised by this package."""


class ZeroOverZero(SmallKnotsError):
    pass


class UndefinedValue(SmallKnotsError):
    pass


class NonPositiveInput(SmallKnotsError):
    pass


class DegenerateLink(SmallKnotsError):
    pass


class OutOfRange(SmallKnotsError):
    pass


class InvalidInput(SmallKnotsError):
    pass


class ExcludedCase(SmallKnotsError):
    """Input lies in a family the construction deliberately does not cover."""


class ParseError(SmallKnotsError):
    """Malformed textual input; ``position`` is a 0-based column into ``text``."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position + 1}: {text!r}")
