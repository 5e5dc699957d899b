"""Exception types shared across the package.

Every failure mode that callers are expected to catch gets its own class;
anything else is a plain bug and surfaces as a raw Python exception.
"""

from __future__ import annotations


class GraykitError(Exception):
    """Base class for all package errors."""


class ParseError(GraykitError):
    """Bad token or malformed declaration in a presentation file."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.line = line
        self.col = col


class UnknownNameError(GraykitError):
    """A declaration or term refers to a name that was never declared."""


class BoundaryMismatchError(GraykitError):
    """Two cells were combined whose boundaries do not fit together."""


class IllTypedError(GraykitError):
    """A pasting term is not well formed over its signature."""


class LawViolation(GraykitError):
    """A finite category table set violates one of its defining laws."""

    def __init__(self, law: str, witness: tuple):
        super().__init__(f"law {law!r} violated at {witness!r}")
        self.law = law
        self.witness = witness


class StepBoundExceeded(GraykitError):
    """Rewriting did not terminate within the configured step bound."""


class SizeBoundExceeded(GraykitError):
    """An enumeration or closure exceeded the configured size cap."""


class UncoveredGeneratorError(GraykitError):
    """A generator assignment misses one of the presentation's generators."""


class NotComposableError(GraykitError):
    """Attempt to compose transformations with mismatched ends."""


class KindMismatchError(GraykitError):
    """Transformation data contradicts its declared kind."""


class FrameMismatchError(GraykitError):
    """Modification frame does not close up."""


class ArityError(GraykitError):
    """Arities of multimaps do not line up for the requested operation."""


class TypeTagError(GraykitError):
    """Incompatible strictness/transformation type tags."""


class CheckFailedError(GraykitError):
    """An input that was required to pass a checker did not."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NoMatchError(GraykitError):
    """A fraction step's declared domain does not occur in the current cell."""


class AmbiguousMatchError(GraykitError):
    """A fraction step's declared domain occurs in more than one position."""


class BoundaryDriftError(GraykitError):
    """The elaborated composite does not end at the declared codomain."""
