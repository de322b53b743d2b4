# acx/acx/frontend/parser.py
"""
Problem file parser.

The input is a sequence of S-expressions; a form may span lines and ``;``
starts a comment running to the end of the line::

    (theory lia)                 ; or empty (the default)
    (ac u)                       ; binary AC symbols
    (op f 1)                     ; free function symbols with their arity
    (const a b c1)               ; free constants
    (assert (= (u a (- c2 c1)) a))
    (goal (= a (u a 0)))         ; several goals are a conjunction

Arithmetic uses ``+`` (two or more arguments, nested to the right), ``-``
(unary negation, or binary subtraction nested to the left), ``*`` with at
least one numeral factor, integer literals and ``(/ p q)`` rationals.

Parsing is done in two passes over the read forms: declarations first, so a
symbol may be declared after its first use, then equations. Every error
carries the line and column of the offending token.
"""

from __future__ import annotations

__all__ = ["SAtom", "SList", "read_sexprs", "parse_problem", "parse_term"]

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Union

from ..config import THEORY_NAMES
from ..core.terms import Equation, Symbol, SymbolKind, Term, make, num
from ..errors import (
    ArityError,
    MissingGoalError,
    ProblemParseError,
    TheoryMismatchError,
    UndeclaredSymbolError,
)
from ..theories.lia import MINUS, NEG, PLUS, TIMES
from .problem import Problem

_INTEGER = re.compile(r"-?\d+\Z")
_RESERVED = {"=", "+", "-", "*", "/", "theory", "ac", "op", "const", "assert", "goal"}


@dataclass(frozen=True)
class SAtom:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int
    column: int


SExpr = Union[SAtom, SList]


########################################
# Reader
########################################

def _tokens(text: str) -> Iterator[SAtom]:
    """Yield '(' / ')' / atom tokens with 1-based line and column."""
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line, col = line + 1, 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "()":
            yield SAtom(c, line, col)
            i += 1
            col += 1
        else:
            start = i
            while i < n and text[i] not in " \t\r\n;()":
                i += 1
            yield SAtom(text[start:i], line, col)
            col += i - start


def read_sexprs(text: str) -> List[SExpr]:
    stack: List[tuple] = []
    top: List[SExpr] = []
    for tok in _tokens(text):
        if tok.text == "(":
            stack.append((tok, []))
        elif tok.text == ")":
            if not stack:
                raise ProblemParseError("unexpected ')'", tok.line, tok.column)
            opener, items = stack.pop()
            node = SList(tuple(items), opener.line, opener.column)
            (stack[-1][1] if stack else top).append(node)
        else:
            (stack[-1][1] if stack else top).append(tok)
    if stack:
        opener = stack[-1][0]
        raise ProblemParseError("unclosed '('", opener.line, opener.column)
    return top


########################################
# Problem construction
########################################

def _head_atom(node: SExpr) -> SAtom:
    if not isinstance(node, SList) or not node.items or not isinstance(node.items[0], SAtom):
        raise ProblemParseError("expected a form '(keyword ...)'", node.line, node.column)
    return node.items[0]


def _expect_atom(node: SExpr, what: str) -> SAtom:
    if not isinstance(node, SAtom):
        raise ProblemParseError(f"expected {what}", node.line, node.column)
    return node


class _ProblemBuilder:
    """Holds the declarations while equations are converted to terms."""

    def __init__(self, theory_override: Optional[str] = None):
        self.theory: Optional[str] = None
        self.theory_override = theory_override
        self.symbols: Dict[str, Symbol] = {}

    @property
    def effective_theory(self) -> str:
        return self.theory_override or self.theory or "empty"

    ########################################
    # Declarations
    ########################################

    def declare(self, form: SList) -> bool:
        keyword = _head_atom(form)
        args = form.items[1:]
        if keyword.text == "theory":
            if len(args) != 1:
                raise ProblemParseError("(theory ...) takes one name", keyword.line, keyword.column)
            name = _expect_atom(args[0], "a theory name")
            if name.text not in THEORY_NAMES:
                raise ProblemParseError(
                    f"unknown theory {name.text!r}; expected one of {', '.join(THEORY_NAMES)}",
                    name.line, name.column,
                )
            if self.theory is not None and self.theory != name.text:
                raise ProblemParseError("conflicting (theory ...) forms", name.line, name.column)
            self.theory = name.text
        elif keyword.text == "ac":
            for a in args:
                self._add(_expect_atom(a, "a symbol name"), SymbolKind.AC, 2)
        elif keyword.text == "const":
            for a in args:
                self._add(_expect_atom(a, "a symbol name"), SymbolKind.UNINTERPRETED, 0)
        elif keyword.text == "op":
            if len(args) != 2:
                raise ProblemParseError("(op f n) takes a name and an arity", keyword.line, keyword.column)
            name = _expect_atom(args[0], "a symbol name")
            arity = _expect_atom(args[1], "an arity")
            if not _INTEGER.match(arity.text) or int(arity.text) < 0:
                raise ProblemParseError(f"invalid arity {arity.text!r}", arity.line, arity.column)
            self._add(name, SymbolKind.UNINTERPRETED, int(arity.text))
        elif keyword.text in ("assert", "goal"):
            return False
        else:
            raise ProblemParseError(f"unknown form {keyword.text!r}", keyword.line, keyword.column)
        return True

    def _add(self, atom: SAtom, kind: SymbolKind, arity: int) -> None:
        if atom.text in _RESERVED or _INTEGER.match(atom.text):
            raise ProblemParseError(f"{atom.text!r} cannot be declared", atom.line, atom.column)
        if atom.text in self.symbols:
            raise ProblemParseError(f"duplicate declaration of {atom.text!r}", atom.line, atom.column)
        self.symbols[atom.text] = Symbol(atom.text, kind, arity, rank=len(self.symbols))

    ########################################
    # Terms and equations
    ########################################

    def equation(self, node: SExpr) -> Equation:
        if (not isinstance(node, SList) or len(node.items) != 3
                or not isinstance(node.items[0], SAtom) or node.items[0].text != "="):
            raise ProblemParseError("expected (= <term> <term>)", node.line, node.column)
        return Equation(self.term(node.items[1]), self.term(node.items[2]))

    def _arith(self, atom: SAtom) -> None:
        if self.effective_theory != "lia":
            raise TheoryMismatchError(
                f"arithmetic {atom.text!r} needs (theory lia)", atom.line, atom.column
            )

    def term(self, node: SExpr) -> Term:
        if isinstance(node, SAtom):
            if _INTEGER.match(node.text):
                self._arith(node)
                return num(int(node.text))
            sym = self._lookup(node)
            if sym.arity != 0:
                raise ArityError(
                    f"{sym.name} expects {sym.arity} arguments, got 0", node.line, node.column
                )
            return make(sym)

        if not node.items:
            raise ProblemParseError("empty application", node.line, node.column)
        head = _expect_atom(node.items[0], "a function symbol")
        args = node.items[1:]
        if head.text in ("+", "-", "*", "/"):
            self._arith(head)
            return self._arith_term(head, args)
        sym = self._lookup(head)
        if len(args) != sym.arity:
            kind = "AC symbol" if sym.kind is SymbolKind.AC else "symbol"
            raise ArityError(
                f"{kind} {sym.name} expects {sym.arity} arguments, got {len(args)}",
                head.line, head.column,
            )
        return make(sym, [self.term(a) for a in args])

    def _lookup(self, atom: SAtom) -> Symbol:
        sym = self.symbols.get(atom.text)
        if sym is None:
            raise UndeclaredSymbolError(f"undeclared symbol {atom.text!r}", atom.line, atom.column)
        return sym

    def _arith_term(self, head: SAtom, args) -> Term:
        op = head.text
        if op == "/":
            if len(args) != 2 or not all(isinstance(a, SAtom) and _INTEGER.match(a.text) for a in args):
                raise ProblemParseError("(/ p q) needs two integer literals", head.line, head.column)
            p, q = int(args[0].text), int(args[1].text)
            if q == 0:
                raise ProblemParseError("division by zero", head.line, head.column)
            return num(Fraction(p, q))

        kids = [self.term(a) for a in args]
        if op == "-":
            if len(kids) == 1:
                return make(NEG, kids)
            if not kids:
                raise ArityError("- expects 1 or more arguments, got 0", head.line, head.column)
            result = kids[0]
            for k in kids[1:]:
                result = make(MINUS, (result, k))
            return result

        if len(kids) < 2:
            raise ArityError(f"{op} expects 2 or more arguments, got {len(kids)}", head.line, head.column)
        symbol = PLUS if op == "+" else TIMES
        if op == "*" and sum(1 for k in kids if not _is_constant_expr(k)) > 1:
            raise ProblemParseError("nonlinear product", head.line, head.column)
        result = kids[-1]
        for k in reversed(kids[:-1]):
            result = make(symbol, (k, result))
        return result

    def build(self, forms: List[SExpr]) -> Problem:
        pending = [f for f in forms if not self.declare(f)]
        problem = Problem(self.effective_theory, dict(self.symbols))
        for form in pending:
            keyword = form.items[0]
            if len(form.items) != 2:
                raise ProblemParseError(
                    f"({keyword.text} ...) takes one equation", keyword.line, keyword.column
                )
            eq = self.equation(form.items[1])
            (problem.hypotheses if keyword.text == "assert" else problem.goals).append(eq)
        if not problem.goals:
            raise MissingGoalError()
        return problem


def _is_constant_expr(t: Term) -> bool:
    if t.is_numeral:
        return True
    return t.is_theory and all(_is_constant_expr(a) for a in t.args)


def parse_problem(text: str, theory: Optional[str] = None) -> Problem:
    """Parse problem text; ``theory`` overrides the file's (theory ...) form."""
    return _ProblemBuilder(theory).build(read_sexprs(text))


def parse_term(text: str, problem: Problem) -> Term:
    """Parse a single term against the declarations of ``problem``."""
    builder = _ProblemBuilder(problem.theory)
    builder.symbols = dict(problem.symbols)
    forms = read_sexprs(text)
    if len(forms) != 1:
        raise ProblemParseError("expected exactly one term", 1, 1)
    return builder.term(forms[0])
