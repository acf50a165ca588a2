"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input syntax errors exit 1, mathematical
domain errors exit 2, unsupported operations exit 3.
"""


class GwdegError(Exception):
    """Base class for every error raised by this package."""


class InputSyntaxError(GwdegError):
    """Malformed text or JSON input; carries an optional character position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class MathDomainError(GwdegError):
    """The operation is undefined for the given mathematical input."""


class FieldMismatchError(MathDomainError):
    """Operands live over different base fields or algebras."""


class DiagonalizationError(MathDomainError):
    """No unit pivot could be produced while diagonalizing over an algebra."""


class UnsupportedOperationError(GwdegError):
    """The computation is not supported over the given field or algebra."""
