# acx/acx/theories/__init__.py

from .base import BOTTOM, Bottom, ShostakTheory, Solved, SolveResult, pick_pivot
from .empty import EmptyTheory
from .lia import LA_SYMBOLS, LinearArithmetic, Polynomial

__all__ = [
    "ShostakTheory",
    "SolveResult",
    "Solved",
    "Bottom",
    "BOTTOM",
    "pick_pivot",
    "EmptyTheory",
    "LinearArithmetic",
    "Polynomial",
    "LA_SYMBOLS",
    "get_theory",
]

_THEORIES = {
    "empty": EmptyTheory,
    "lia": LinearArithmetic,
}


def get_theory(name: str) -> ShostakTheory:
    """Theory instance by CLI name ("empty" or "lia")."""
    try:
        return _THEORIES[name]()
    except KeyError:
        raise ValueError(f"unknown theory {name!r}; expected one of {sorted(_THEORIES)}") from None
