# acx/acx/theories/base.py

from __future__ import annotations

__all__ = ["ShostakTheory", "SolveResult", "Bottom", "Solved", "BOTTOM", "AtomImage", "pick_pivot"]

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional, Protocol, Tuple, Union

from ..core.ordering import compare_or_structural
from ..core.terms import Symbol, Term


class AtomImage(Protocol):
    """What a theory needs from the canonizer context: the term an atom stands for."""

    def image(self, atom: Term) -> Term: ...


@dataclass(frozen=True)
class Bottom:
    """The equation is inconsistent with the theory."""

    def __str__(self) -> str:
        return "⊥"


BOTTOM = Bottom()


@dataclass(frozen=True)
class Solved:
    """Solved form {x_1 ↦ t_1, ...}; the x_i are atoms (variables or K constants)."""
    pairs: Tuple[Tuple[Term, Term], ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def as_dict(self) -> Dict[Term, Term]:
        return dict(self.pairs)


SolveResult = Union[Bottom, Solved]


class ShostakTheory(ABC):
    """A theory X given by a canonizer and a solver.

    Contract checked by the test-suite and, with ``debug_checks``, by the engine:

    - ``canonize`` is idempotent and decides =_X;
    - ``canonize(t)`` is never above ``t`` in the ordering;
    - every solved pair (x, t) has the image of t strictly below the image of x.
    """

    name: str = ""

    @property
    @abstractmethod
    def signature(self) -> Tuple[Symbol, ...]:
        """The symbols of Σ_X."""

    def symbol(self, name: str) -> Optional[Symbol]:
        for s in self.signature:
            if s.name == name:
                return s
        return None

    @property
    def has_numerals(self) -> bool:
        return False

    @abstractmethod
    def canonize(self, t: Term, ctx: Optional[AtomImage] = None) -> Term:
        """can_X on a pure term over Σ_X, K constants and variables."""

    @abstractmethod
    def solve(self, s: Term, t: Term, ctx: Optional[AtomImage] = None) -> SolveResult:
        """solve_X on pure terms."""

    def __str__(self) -> str:
        return self.name


def _image_of(ctx: Optional[AtomImage]) -> Callable[[Term], Term]:
    if ctx is None:
        return lambda atom: atom
    return ctx.image


def pick_pivot(atoms: Iterable[Term], ctx: Optional[AtomImage] = None,
               weight: Optional[Callable[[Term], object]] = None) -> Term:
    """The atom whose image is maximal; ``weight`` breaks exact ties."""
    image = _image_of(ctx)

    def cmp(a: Term, b: Term) -> int:
        c = compare_or_structural(image(a), image(b))
        if c or weight is None:
            return c
        wa, wb = weight(a), weight(b)
        return (wa > wb) - (wa < wb)

    best = None
    for atom in atoms:
        if best is None or cmp(atom, best) > 0:
            best = atom
    return best

