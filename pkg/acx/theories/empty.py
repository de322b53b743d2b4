# acx/acx/theories/empty.py

from __future__ import annotations

__all__ = ["EmptyTheory"]

from typing import Optional, Tuple

from ..core.terms import Symbol, Term
from .base import AtomImage, ShostakTheory, Solved, SolveResult, pick_pivot


class EmptyTheory(ShostakTheory):
    """X = ∅: no symbols, pure terms are atoms, solving orients the pair."""

    name = "empty"

    @property
    def signature(self) -> Tuple[Symbol, ...]:
        return ()

    def canonize(self, t: Term, ctx: Optional[AtomImage] = None) -> Term:
        return t

    def solve(self, s: Term, t: Term, ctx: Optional[AtomImage] = None) -> SolveResult:
        if s is t:
            return Solved(())
        bigger = pick_pivot((s, t), ctx)
        smaller = t if bigger is s else s
        return Solved(((bigger, smaller),))
