# acx/acx/core/terms.py
"""
Term Algebra
============

Architecture Overview:
---------------------
Every object the engine manipulates is a :class:`Term`: an immutable node made of
a head and a tuple of argument terms. Terms are hash-consed through a
per-process table, so structural equality *is* identity and ``is`` /
``==`` / ``hash`` are all O(1).

Heads come in four flavours:

- :class:`Symbol` - a declared function symbol. Its :class:`SymbolKind` puts it
  in exactly one of Σ_AC (binary AC symbols), Σ_E (uninterpreted) or Σ_X (the
  symbols of the Shostak theory).
- :class:`KConst` - constants that name abstracted subterms. They never come
  from user input; the canonizer context creates them and their creation index
  is their rank in the ordering.
- :class:`InternalVar` - abstraction variables standing for foreign subterms
  inside theory terms.
- :class:`Numeral` - exact rationals.

Positions are tuples of 0-based child indices, ``()`` being the root.

Structural order:
----------------
``term.sort_key`` is a total, interning-independent order used to sort AC
aliens and to break ties. Numerals < K constants < variables < Σ_X < Σ_E < Σ_AC,
then by value / index / declaration rank, then arity, then children.

Multisets:
---------
Alien multisets are plain :class:`collections.Counter` objects over interned
terms; :func:`aliens` returns them as ⊴-sorted tuples, which is also the order
:func:`comb` builds right-leaning AC combs in.
"""

from __future__ import annotations

__all__ = [
    "SymbolKind",
    "Symbol",
    "KConst",
    "InternalVar",
    "Numeral",
    "Term",
    "Position",
    "Equation",
    "Rule",
    "make",
    "app",
    "num",
    "kconst",
    "var",
    "subterm_at",
    "replace_at",
    "positions",
    "aliens",
    "comb",
    "multiset",
    "is_submultiset",
    "multiset_difference",
    "multiset_intersection",
    "apply_substitution",
    "format_term",
    "interned_count",
]

import threading
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..errors import InvalidPositionError, SignatureError


class SymbolKind(Enum):
    AC = "ac"
    UNINTERPRETED = "uninterpreted"
    THEORY = "theory"


# ⊴ head classes
_NUMERAL, _KCONST, _VAR, _THEORY, _UNINTERPRETED, _AC = range(6)
_KIND_CLASS = {
    SymbolKind.THEORY: _THEORY,
    SymbolKind.UNINTERPRETED: _UNINTERPRETED,
    SymbolKind.AC: _AC,
}


@dataclass(frozen=True)
class Symbol:
    """A function symbol of Σ_AC ⊎ Σ_E ⊎ Σ_X."""
    name: str
    kind: SymbolKind
    arity: int
    rank: int = 0

    def __post_init__(self):
        if self.kind is SymbolKind.AC and self.arity != 2:
            raise SignatureError(f"AC symbol {self.name} must be binary, got arity {self.arity}")
        if self.arity < 0:
            raise SignatureError(f"negative arity for {self.name}")

    @property
    def is_ac(self) -> bool:
        return self.kind is SymbolKind.AC

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class KConst:
    """Abstraction constant; ``index`` is its creation order."""
    name: str
    index: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class InternalVar:
    """Abstraction variable standing for a foreign subterm."""
    index: int

    @property
    def name(self) -> str:
        return f"x{self.index}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Numeral:
    value: Fraction

    def __str__(self) -> str:
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


Head = Union[Symbol, KConst, InternalVar, Numeral]
Position = Tuple[int, ...]


class Term:
    """Interned immutable term. Build with :func:`make` or the helpers, never directly."""

    __slots__ = ("head", "args", "_key", "_size", "__weakref__")

    head: Head
    args: Tuple["Term", ...]

    def __init__(self, head: Head, args: Tuple["Term", ...]):
        self.head = head
        self.args = args
        self._key = None
        self._size = None

    # identity semantics come from interning
    __hash__ = object.__hash__

    def __eq__(self, other) -> bool:
        return self is other

    def __ne__(self, other) -> bool:
        return self is not other

    def __reduce__(self):
        return (make, (self.head, self.args))

    @property
    def symbol(self) -> Optional[Symbol]:
        return self.head if isinstance(self.head, Symbol) else None

    @property
    def is_ac(self) -> bool:
        return isinstance(self.head, Symbol) and self.head.kind is SymbolKind.AC

    @property
    def is_theory(self) -> bool:
        return isinstance(self.head, Symbol) and self.head.kind is SymbolKind.THEORY

    @property
    def is_uninterpreted(self) -> bool:
        return isinstance(self.head, Symbol) and self.head.kind is SymbolKind.UNINTERPRETED

    @property
    def is_kconst(self) -> bool:
        return isinstance(self.head, KConst)

    @property
    def is_var(self) -> bool:
        return isinstance(self.head, InternalVar)

    @property
    def is_numeral(self) -> bool:
        return isinstance(self.head, Numeral)

    @property
    def size(self) -> int:
        if self._size is None:
            self._size = 1 + sum(a.size for a in self.args)
        return self._size

    @property
    def sort_key(self) -> tuple:
        """Structural total order ⊴."""
        if self._key is None:
            head = self.head
            if isinstance(head, Numeral):
                hk = (_NUMERAL, head.value)
            elif isinstance(head, KConst):
                hk = (_KCONST, head.index, head.name)
            elif isinstance(head, InternalVar):
                hk = (_VAR, head.index)
            else:
                hk = (_KIND_CLASS[head.kind], head.rank, head.name)
            self._key = (hk, len(self.args), tuple(a.sort_key for a in self.args))
        return self._key

    def __lt__(self, other: "Term") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({format_term(self)})"


########################################
# Interning
########################################

_TABLE: Dict[tuple, Term] = {}
_TABLE_LOCK = threading.Lock()


def make(head: Head, args: Iterable[Term] = ()) -> Term:
    """Return the unique term with this head and these arguments."""
    args = tuple(args)
    key = (head, args)
    term = _TABLE.get(key)
    if term is not None:
        return term
    with _TABLE_LOCK:
        term = _TABLE.get(key)
        if term is None:
            term = Term(head, args)
            _TABLE[key] = term
    return term


def interned_count() -> int:
    return len(_TABLE)


def app(symbol: Symbol, *args: Term) -> Term:
    if len(args) != symbol.arity:
        raise SignatureError(f"{symbol.name} expects {symbol.arity} arguments, got {len(args)}")
    return make(symbol, args)


def num(value: Union[int, str, Fraction]) -> Term:
    return make(Numeral(Fraction(value)))


def kconst(name: str, index: int) -> Term:
    return make(KConst(name, index))


def var(index: int) -> Term:
    return make(InternalVar(index))


########################################
# Equations and rules
########################################

@dataclass(frozen=True)
class Equation:
    """Unordered pair s ≈ t."""
    lhs: Term
    rhs: Term

    @property
    def is_trivial(self) -> bool:
        return self.lhs is self.rhs

    def normalized(self) -> "Equation":
        """Same equation with sides in ⊴ order."""
        if self.rhs.sort_key < self.lhs.sort_key:
            return Equation(self.rhs, self.lhs)
        return self

    def __str__(self) -> str:
        return f"{self.lhs} ≈ {self.rhs}"


@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs} → {self.rhs}"


########################################
# Positions
########################################

def subterm_at(t: Term, p: Iterable[int]) -> Term:
    p = tuple(p)
    node = t
    for i in p:
        if not 0 <= i < len(node.args):
            raise InvalidPositionError(p, t)
        node = node.args[i]
    return node


def replace_at(t: Term, p: Iterable[int], r: Term) -> Term:
    p = tuple(p)
    if not p:
        return r
    i = p[0]
    if not 0 <= i < len(t.args):
        raise InvalidPositionError(p, t)
    try:
        child = replace_at(t.args[i], p[1:], r)
    except InvalidPositionError:
        raise InvalidPositionError(p, t) from None
    args = list(t.args)
    args[i] = child
    return make(t.head, args)


def positions(t: Term) -> Iterator[Tuple[Position, Term]]:
    """All (position, subterm) pairs, innermost-leftmost first (post-order)."""
    stack: list = [((), t, False)]
    while stack:
        pos, node, expanded = stack.pop()
        if expanded or not node.args:
            yield pos, node
            continue
        stack.append((pos, node, True))
        for i in range(len(node.args) - 1, -1, -1):
            stack.append((pos + (i,), node.args[i], False))


########################################
# AC aliens and combs
########################################

def aliens(t: Term, u: Symbol) -> Tuple[Term, ...]:
    """The u-aliens of t as a ⊴-sorted tuple (a multiset with repetitions)."""
    if not isinstance(u, Symbol) or u.kind is not SymbolKind.AC:
        raise SignatureError(f"aliens needs an AC symbol, got {u}")
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.head == u:
            stack.extend(node.args)
        else:
            out.append(node)
    out.sort(key=lambda s: s.sort_key)
    return tuple(out)


def comb(u: Symbol, items: Iterable[Term]) -> Term:
    """Right-leaning u-comb over the ⊴-sorted items; a single item is returned as-is."""
    ordered = sorted(items, key=lambda s: s.sort_key)
    if not ordered:
        raise SignatureError(f"empty comb for {u}")
    result = ordered[-1]
    for s in reversed(ordered[:-1]):
        result = make(u, (s, result))
    return result


def multiset(terms: Iterable[Term]) -> Counter:
    return Counter(terms)


def is_submultiset(small: Counter, big: Counter) -> bool:
    return all(big[k] >= n for k, n in small.items())


def multiset_difference(big: Counter, small: Counter) -> Counter:
    return big - small


def multiset_intersection(a: Counter, b: Counter) -> Counter:
    return a & b


########################################
# Substitution
########################################

def apply_substitution(t: Term, sigma: Mapping[Term, Term]) -> Term:
    """Replace every mapped leaf by its image, homomorphically."""
    if not sigma:
        return t
    memo: Dict[Term, Term] = {}

    def walk(node: Term) -> Term:
        hit = sigma.get(node)
        if hit is not None:
            return hit
        if not node.args:
            return node
        done = memo.get(node)
        if done is not None:
            return done
        new_args = tuple(walk(a) for a in node.args)
        result = node if all(x is y for x, y in zip(new_args, node.args)) else make(node.head, new_args)
        memo[node] = result
        return result

    return walk(t)


########################################
# Printing
########################################

_INFIX = {"+", "-", "*"}


def format_term(t: Term) -> str:
    head = t.head
    if not isinstance(head, Symbol):
        return str(head)
    if head.kind is SymbolKind.THEORY:
        return _format_theory(t)
    if not t.args:
        return head.name
    return f"{head.name}({','.join(format_term(a) for a in t.args)})"


def _format_atom(t: Term) -> str:
    s = format_term(t)
    if t.is_theory or (t.is_numeral and t.head.value < 0):
        return f"({s})"
    return s


def _format_theory(t: Term) -> str:
    name = t.head.name
    if name == "+":
        parts = []
        node = t
        while node.is_theory and node.head.name == "+":
            parts.append(node.args[0])
            node = node.args[1]
        parts.append(node)
        out = _format_summand(parts[0], first=True)
        for p in parts[1:]:
            out += _format_summand(p, first=False)
        return out
    if name == "*":
        return f"{_format_atom(t.args[0])}*{_format_atom(t.args[1])}"
    if name == "-":
        return f"{_format_atom(t.args[0])} - {_format_atom(t.args[1])}"
    if name == "neg":
        return f"-{_format_atom(t.args[0])}"
    return f"{name}({','.join(format_term(a) for a in t.args)})"


def _format_summand(t: Term, first: bool) -> str:
    # c*a with c < 0 and negative numerals print as subtraction
    negative = None
    if t.is_numeral and t.head.value < 0:
        negative = str(Numeral(-t.head.value))
    elif t.is_theory and t.head.name == "*" and t.args[0].is_numeral and t.args[0].head.value < 0:
        coeff = -t.args[0].head.value
        body = _format_atom(t.args[1])
        negative = body if coeff == 1 else f"{Numeral(coeff)}*{body}"
    if negative is not None:
        return f"-{negative}" if first else f" - {negative}"
    text = _format_atom(t) if t.is_theory and t.head.name == "+" else format_term(t)
    return text if first else f" + {text}"
