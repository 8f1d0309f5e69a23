"""Shared exception types.

Everything raised on purpose by this package derives from TentplaneError,
so callers can catch one type at the boundary.  Parsing problems carry
position info; depth-limited answers that would require extrapolating an
unvalidated symbol raise AmbiguousAtDepth instead of guessing.
"""
from __future__ import annotations


class TentplaneError(Exception):
    pass


class MalformedSequence(TentplaneError):
    """Sequence notation that does not parse or violates a structural rule."""


class MalformedStarPeriod(MalformedSequence):
    """Star-resolution input must be pure periodic with exactly one trailing star."""


class NotAdmissible(TentplaneError):
    """Sequence rejected by the kneading bounds."""


class AmbiguousAtDepth(TentplaneError):
    """The answer depends on symbols beyond the validated depth.

    Raised instead of silently extrapolating a truncated kneading sequence.
    """

    def __init__(self, msg: str, depth=None):
        super().__init__(msg)
        self.depth = depth


class RankTie(TentplaneError):
    """Two inputs compare equal only because the comparison window ran out."""


class ChartOverflow(TentplaneError):
    """Gluing chart has no room: a required margin came out non-positive."""


class WrongContext(TentplaneError):
    """Operation asked about a tail that is not the scene's left context."""


class ParseError(TentplaneError):
    """Config text that does not parse.  Carries 1-based line and column."""

    def __init__(self, msg: str, line: int = 1, col: int = 1):
        super().__init__(f"{msg} (line {line}, col {col})")
        self.line = line
        self.col = col


class ConflictError(TentplaneError):
    """Mutually exclusive config keys were both given."""
