# acx/acx/errors.py
"""Exception hierarchy shared by the engine and the CLI.

Every failure the package raises on purpose derives from :class:`AcxError`.
The CLI maps the two families that reach users to exit codes:
:class:`ProblemError` (2) and :class:`BudgetExceededError` (3).
"""

from __future__ import annotations

__all__ = [
    "AcxError",
    "InvalidPositionError",
    "SignatureError",
    "OrderingError",
    "TheoryError",
    "NonlinearTermError",
    "UnboundConstantError",
    "BudgetExceededError",
    "ProblemError",
    "ProblemParseError",
    "UndeclaredSymbolError",
    "ArityError",
    "TheoryMismatchError",
    "MissingGoalError",
]


class AcxError(Exception):
    """Base class of all acx errors."""


class InvalidPositionError(AcxError):
    """A position does not address a node of the term."""

    def __init__(self, position, term) -> None:
        super().__init__(f"invalid position {list(position)} in {term}")
        self.position = tuple(position)
        self.term = term


class SignatureError(AcxError):
    """A symbol is used against its declared kind or arity."""


class OrderingError(AcxError):
    """A term handed to the ordering is outside its domain."""


class TheoryError(AcxError):
    """Failure inside a Shostak theory."""


class NonlinearTermError(TheoryError):
    """Product of two non-numeral factors in linear arithmetic."""


class UnboundConstantError(AcxError):
    """A K constant has no binding in the abstraction run."""


class BudgetExceededError(AcxError):
    """The inference or normal-form step budget ran out."""

    def __init__(self, what: str, budget: int) -> None:
        super().__init__(f"{what} budget of {budget} steps exceeded")
        self.what = what
        self.budget = budget


class ProblemError(AcxError):
    """Base class for malformed problem input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ProblemParseError(ProblemError):
    """Syntax error in a problem file."""


class UndeclaredSymbolError(ProblemError):
    """Symbol used without a declaration."""


class ArityError(ProblemError):
    """Wrong number of arguments for a symbol."""


class TheoryMismatchError(ProblemError):
    """Theory operator or numeral used under a theory that lacks it."""


class MissingGoalError(ProblemError):
    """Problem file without any (goal ...) form."""

    def __init__(self) -> None:
        super().__init__("no goal")
