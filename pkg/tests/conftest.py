# acx/tests/conftest.py

import random

import pytest

from acx.config import _ProverConfigInternal
from acx.core.terms import Symbol, SymbolKind, Term, app, make
from acx.engine.canon import CanonContext
from acx.frontend.parser import parse_problem
from acx.problems import load_problem_text
from acx.theories import EmptyTheory, LinearArithmetic


class Sig:
    """Small hand-built signature shared by the unit tests.

    Constants a..e, free symbols f, g (unary) and h (binary), AC symbols u
    and w. Ranks follow the order below.
    """

    def __init__(self):
        self.symbols = {}
        for name in "abcde":
            setattr(self, name, make(self._declare(name, SymbolKind.UNINTERPRETED, 0)))
        self.f = self._declare("f", SymbolKind.UNINTERPRETED, 1)
        self.g = self._declare("g", SymbolKind.UNINTERPRETED, 1)
        self.h = self._declare("h", SymbolKind.UNINTERPRETED, 2)
        self.u = self._declare("u", SymbolKind.AC, 2)
        self.w = self._declare("w", SymbolKind.AC, 2)

    def _declare(self, name, kind, arity):
        sym = Symbol(name, kind, arity, rank=len(self.symbols))
        self.symbols[name] = sym
        return sym

    def U(self, *items: Term) -> Term:
        """Right-nested u over items, in the given order."""
        result = items[-1]
        for t in reversed(items[:-1]):
            result = app(self.u, t, result)
        return result

    def W(self, *items: Term) -> Term:
        result = items[-1]
        for t in reversed(items[:-1]):
            result = app(self.w, t, result)
        return result

    def F(self, t: Term) -> Term:
        return app(self.f, t)

    def G(self, t: Term) -> Term:
        return app(self.g, t)


@pytest.fixture
def sig() -> Sig:
    return Sig()


@pytest.fixture
def empty_ctx() -> CanonContext:
    return CanonContext(EmptyTheory(), debug_checks=True)


@pytest.fixture
def lia_ctx() -> CanonContext:
    return CanonContext(LinearArithmetic(), debug_checks=True)


@pytest.fixture
def config() -> _ProverConfigInternal:
    return _ProverConfigInternal(debug_checks=True)


@pytest.fixture
def fig3():
    return parse_problem(load_problem_text("fig3"))


@pytest.fixture
def fig4():
    return parse_problem(load_problem_text("fig4"))


@pytest.fixture
def inconsistent():
    return parse_problem(load_problem_text("inconsistent"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
