"""Exception hierarchy shared by all hdakit modules.

Every error raised on purpose by this package derives from :class:`HdaError`,
so callers can catch one base class.  The split below mirrors the command line
exit codes: bad input data maps to exit code 2, exhausted resource limits to
exit code 3.
"""

from __future__ import annotations


class HdaError(Exception):
    """Base class for all errors raised by hdakit."""


class InputError(HdaError):
    """Invalid input data: malformed documents, broken invariants, bad arguments."""


class ParseError(InputError):
    """A document is not syntactically valid JSON or misses required structure.

    Attributes
    ----------
    line, column : int or None
        Position of the syntax error in the source text, when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SemanticError(InputError):
    """A well-formed document violates a structural rule.

    Attributes
    ----------
    violations : list of str
        Human-readable descriptions, one per violated rule.
    """

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = list(violations or [])


class PathError(InputError):
    """A cube sequence is not a valid cube path.

    Attributes
    ----------
    position : int or None
        One-based index of the first step that fails, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class AmbiguousStepError(PathError):
    """A step of a cube sequence matches more than one face index."""


class ConcatError(InputError):
    """Two cube paths cannot be concatenated at their junction."""


class PreconditionError(InputError):
    """An operation was called on input that violates its stated precondition."""


class ResourceError(HdaError):
    """A configured size or search bound was exceeded."""


class StateError(HdaError):
    """A game operation was applied in a state that does not allow it."""


class MoveError(HdaError):
    """An illegal game move.

    Attributes
    ----------
    legal_moves : list
        The moves that would have been legal in the current position.
    """

    def __init__(self, message: str, legal_moves: list | None = None):
        super().__init__(message)
        self.legal_moves = list(legal_moves or [])
