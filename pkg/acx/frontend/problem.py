# acx/acx/frontend/problem.py

from __future__ import annotations

__all__ = ["Problem", "render_problem", "render_term"]

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from ..core.terms import Equation, Symbol, SymbolKind, Term


@dataclass
class Problem:
    """A parsed problem: theory, declared symbols, hypotheses and goals.

    ``symbols`` keeps declaration order; a symbol's ``rank`` is its position
    in that order, which is also the order of the K constants the declared
    constants become.
    """
    theory: str
    symbols: Dict[str, Symbol] = field(default_factory=dict)
    hypotheses: List[Equation] = field(default_factory=list)
    goals: List[Equation] = field(default_factory=list)

    @property
    def goal(self) -> Equation:
        return self.goals[0]

    @property
    def ac_symbols(self) -> List[Symbol]:
        return [s for s in self.symbols.values() if s.kind is SymbolKind.AC]

    @property
    def constants(self) -> List[Symbol]:
        return [s for s in self.symbols.values() if s.kind is SymbolKind.UNINTERPRETED and s.arity == 0]

    @property
    def functions(self) -> List[Symbol]:
        return [s for s in self.symbols.values() if s.kind is SymbolKind.UNINTERPRETED and s.arity > 0]


def _render_numeral(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"(/ {value.numerator} {value.denominator})"


def render_term(t: Term) -> str:
    """S-expression text for a parsed (not canonized) term."""
    if t.is_numeral:
        return _render_numeral(t.head.value)
    if not t.args:
        return t.head.name
    name = t.head.name
    if name == "neg" and t.is_theory:
        name = "-"
    return f"({name} {' '.join(render_term(a) for a in t.args)})"


def _render_equation(eq: Equation) -> str:
    return f"(= {render_term(eq.lhs)} {render_term(eq.rhs)})"


def render_problem(problem: Problem) -> str:
    """Problem file text that parses back to an identical problem."""
    lines = [f"(theory {problem.theory})"]
    # one declaration per line keeps declaration order, and with it the ranks
    for sym in problem.symbols.values():
        if sym.kind is SymbolKind.AC:
            lines.append(f"(ac {sym.name})")
        elif sym.arity == 0:
            lines.append(f"(const {sym.name})")
        else:
            lines.append(f"(op {sym.name} {sym.arity})")
    for eq in problem.hypotheses:
        lines.append(f"(assert {_render_equation(eq)})")
    for eq in problem.goals:
        lines.append(f"(goal {_render_equation(eq)})")
    return "\n".join(lines) + "\n"
