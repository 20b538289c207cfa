"""Exception hierarchy shared by every module of the package."""


class StableHitError(Exception):
    """Base class for all errors raised by stablehit."""


class PreconditionError(StableHitError, ValueError):
    """An input violates the documented precondition of an operation."""


class InternalContradiction(StableHitError, RuntimeError):
    """A state that the underlying theory rules out was reached.

    Seeing this on valid input means there is a bug in the library.
    """


class CapExceeded(StableHitError):
    """A configured size or work cap was exceeded."""


class GraphFormatError(StableHitError, ValueError):
    """A graph file could not be parsed."""
