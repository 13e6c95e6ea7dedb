"""Exception hierarchy shared by the library and the command line."""


class LPAError(Exception):
    """Base class for all errors raised by :mod:`lpa`."""

    exit_code = 3


class ParseError(LPAError):
    """Malformed input text (graph JSON or an expression)."""

    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SemanticError(LPAError):
    """Well-formed input that violates a structural invariant."""


class PreconditionError(SemanticError):
    """An operation was called outside of its domain."""


class MismatchError(SemanticError):
    """Elements over different graphs or fields were combined."""
