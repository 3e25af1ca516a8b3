"""Exception types shared across the package."""


class DegenError(Exception):
    """Base class for all errors raised by degenbell."""


class DomainError(DegenError, ValueError):
    """An operation was applied outside its mathematical domain."""


class PrecisionError(DegenError, ArithmeticError):
    """Not enough trusted terms (series order, Dobinski terms) for the request."""


class ResourceError(DegenError, RuntimeError):
    """A brute-force oracle was asked for an input beyond its enumeration bound."""
