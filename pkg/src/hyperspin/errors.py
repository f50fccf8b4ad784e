class HyperspinError(Exception):
    """Base class for errors raised by this package."""


class ExactDivisionError(HyperspinError, ZeroDivisionError):
    pass


class InfiniteValueError(HyperspinError, ValueError):
    """An operation that needs a finite value was given an infinite one."""


class PreconditionError(HyperspinError, ValueError):
    pass


class ParseError(HyperspinError, ValueError):
    """Syntax error carrying the offending position in the input text."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def annotated(self) -> str:
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"
