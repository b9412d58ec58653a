"""Exception hierarchy for the engine.

Everything raised deliberately derives from EngineError so callers (and the
CLI) can separate engine failures from programming errors.
"""


class EngineError(Exception):
    """Base class for all errors raised by hkforge."""


class RingMismatch(EngineError):
    """Operands live over incompatible rings (different p or variables)."""


class DimensionError(EngineError):
    """Exponent vectors of unequal length were compared or combined."""


class ZeroPolynomial(EngineError):
    """An operation that needs a nonzero polynomial received zero."""


class ZeroDivisor(EngineError):
    """Colon or saturation by zero."""


class CapExceeded(EngineError):
    """A configured limit (bracket exponent, saturation steps) was hit."""


class ContainmentError(EngineError):
    """A required ideal containment J <= I does not hold."""


class EmptyVariety(EngineError):
    """The unit ideal has no quotient to measure."""


class InfiniteColength(EngineError):
    """The ideal does not have finite colength, so the request is undefined."""


class ParseError(EngineError):
    """Session text could not be parsed; carries a source location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
