"""Exception hierarchy for the whole engine.

Every error raised on a user-facing path (bad query text, bad schema, bad
data file, runtime evaluation failure) derives from :class:`GsqlError` so the
CLI can distinguish user errors (exit 1) from engine bugs (exit 2).
"""

from __future__ import annotations


class GsqlError(Exception):
    """Base class for all user-facing errors."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None:
            return f"{self.line}:{self.col}: {self.message}"
        return self.message


class LexError(GsqlError):
    """Illegal character or unterminated literal."""


class ParseError(GsqlError):
    """Syntax error; carries the expected-token description."""


class SemanticError(GsqlError):
    """Name resolution or type error found by the checker."""


class DdlError(GsqlError):
    """Invalid schema statement (duplicate type, unresolved endpoint, ...)."""


class LoadError(GsqlError):
    """Data file could not be ingested."""


class ExecError(GsqlError):
    """Runtime evaluation failure (division by zero, bad argument, ...)."""
