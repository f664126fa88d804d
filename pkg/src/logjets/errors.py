"""Exception hierarchy shared by every module of the package."""


class LogJetsError(Exception):
    """Base class for all errors raised by logjets."""


class ContextMismatchError(LogJetsError, ValueError):
    """Two operands live in different polynomial rings."""


class ParseError(LogJetsError, ValueError):
    """Malformed textual input.  Carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class PreconditionError(LogJetsError, ValueError):
    """Input violates a hypothesis of the requested construction."""


class UnsupportedError(LogJetsError):
    """Input is valid mathematics but outside what is implemented."""


class ResourceLimitError(LogJetsError):
    """A configured computation limit was exceeded."""
