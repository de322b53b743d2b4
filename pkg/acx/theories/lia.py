# acx/acx/theories/lia.py
"""
Linear rational arithmetic as a Shostak theory.

Pure terms are read into a :class:`Polynomial` (atom -> coefficient plus a
constant) and written back in a unique shape::

    c_1*a_1 + (c_2*a_2 + ( ... + c))

Monomials are listed by descending atom rank: K constants by creation index,
abstraction variables above every K constant and ordered among themselves by
the structural order of the term they stand for. Unit coefficients are
dropped, a zero constant is dropped, and the empty sum is ``0``.
"""

from __future__ import annotations

__all__ = [
    "LinearArithmetic",
    "Polynomial",
    "PLUS",
    "MINUS",
    "TIMES",
    "NEG",
    "LA_SYMBOLS",
]

from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from ..core.terms import Symbol, SymbolKind, Term, make, num
from ..errors import NonlinearTermError, TheoryError
from .base import BOTTOM, AtomImage, ShostakTheory, Solved, SolveResult, pick_pivot

TIMES = Symbol("*", SymbolKind.THEORY, 2, rank=0)
PLUS = Symbol("+", SymbolKind.THEORY, 2, rank=1)
MINUS = Symbol("-", SymbolKind.THEORY, 2, rank=2)
NEG = Symbol("neg", SymbolKind.THEORY, 1, rank=3)
LA_SYMBOLS = (TIMES, PLUS, MINUS, NEG)

_ZERO = Fraction(0)


class Polynomial:
    """Linear combination of atoms with rational coefficients."""

    __slots__ = ("monomials", "constant")

    def __init__(self, monomials: Optional[Dict[Term, Fraction]] = None, constant=_ZERO):
        self.monomials: Dict[Term, Fraction] = {a: c for a, c in (monomials or {}).items() if c != 0}
        self.constant = Fraction(constant)

    @classmethod
    def from_term(cls, t: Term) -> "Polynomial":
        if t.is_numeral:
            return cls({}, t.head.value)
        if t.is_kconst or t.is_var:
            return cls({t: Fraction(1)})
        if not t.is_theory:
            raise TheoryError(f"{t} is not a pure linear term")
        name = t.head.name
        if name == "+":
            return cls.from_term(t.args[0]) + cls.from_term(t.args[1])
        if name == "-":
            return cls.from_term(t.args[0]) - cls.from_term(t.args[1])
        if name == "neg":
            return cls.from_term(t.args[0]).scale(-1)
        if name == "*":
            left, right = cls.from_term(t.args[0]), cls.from_term(t.args[1])
            if left.is_constant:
                return right.scale(left.constant)
            if right.is_constant:
                return left.scale(right.constant)
            raise NonlinearTermError(f"nonlinear product {t}")
        raise TheoryError(f"unknown arithmetic symbol {name}")

    @property
    def is_constant(self) -> bool:
        return not self.monomials

    def __add__(self, other: "Polynomial") -> "Polynomial":
        merged = dict(self.monomials)
        for a, c in other.monomials.items():
            merged[a] = merged.get(a, _ZERO) + c
        return Polynomial(merged, self.constant + other.constant)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, factor) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial({a: c * factor for a, c in self.monomials.items()}, self.constant * factor)

    def without(self, atom: Term) -> "Polynomial":
        rest = dict(self.monomials)
        rest.pop(atom, None)
        return Polynomial(rest, self.constant)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.monomials == other.monomials
                and self.constant == other.constant)

    def __hash__(self):
        return hash((frozenset(self.monomials.items()), self.constant))

    def evaluate(self, assignment: Dict[Term, Fraction]) -> Fraction:
        return self.constant + sum((c * assignment[a] for a, c in self.monomials.items()), _ZERO)

    def to_term(self, ctx: Optional[AtomImage] = None) -> Term:
        parts = [_monomial(a, self.monomials[a]) for a in _descending_atoms(self.monomials, ctx)]
        if self.constant != 0 or not parts:
            parts.append(num(self.constant))
        result = parts[-1]
        for p in reversed(parts[:-1]):
            result = make(PLUS, (p, result))
        return result

    def __repr__(self) -> str:
        return f"Polynomial({self.to_term()})"


def _atom_rank(atom: Term, ctx: Optional[AtomImage]) -> tuple:
    if atom.is_kconst:
        return (0, atom.head.index)
    image = ctx.image(atom) if ctx is not None else atom
    return (1, image.sort_key)


def _descending_atoms(atoms: Iterable[Term], ctx: Optional[AtomImage]):
    return sorted(atoms, key=lambda a: _atom_rank(a, ctx), reverse=True)


def _monomial(atom: Term, coeff: Fraction) -> Term:
    if coeff == 1:
        return atom
    return make(TIMES, (num(coeff), atom))


class LinearArithmetic(ShostakTheory):
    """Linear arithmetic over the rationals."""

    name = "lia"

    @property
    def signature(self) -> Tuple[Symbol, ...]:
        return LA_SYMBOLS

    @property
    def has_numerals(self) -> bool:
        return True

    def canonize(self, t: Term, ctx: Optional[AtomImage] = None) -> Term:
        return Polynomial.from_term(t).to_term(ctx)

    def solve(self, s: Term, t: Term, ctx: Optional[AtomImage] = None) -> SolveResult:
        diff = Polynomial.from_term(s) - Polynomial.from_term(t)
        if diff.is_constant:
            return BOTTOM if diff.constant != 0 else Solved(())
        pivot = pick_pivot(diff.monomials, ctx, weight=lambda a: abs(diff.monomials[a]))
        coeff = diff.monomials[pivot]
        solution = diff.without(pivot).scale(Fraction(-1) / coeff)
        return Solved(((pivot, solution.to_term(ctx)),))
