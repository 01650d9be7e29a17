"""Exception types shared across the package."""


class ParseError(ValueError):
    """A document (space matrix or graph edge list) failed to parse."""


class InternalInvariantError(RuntimeError):
    """Two routes that must agree produced different answers.

    Raised when a cross-check the library performs on its own results
    fails; seeing this means a bug, not bad input.
    """
