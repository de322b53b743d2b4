# acx/acx/core/ordering.py
"""
Orderings over abstracted terms.

``compare_x`` is a total rewrite ordering on 𝒯(Σ_X ∪ K). It compares
lexicographically:

1. the multiset of K constants occurring in the term (multiset extension of
   creation order),
2. a monotone integer weight,
3. a recursive path ordering with precedence numerals < Σ_X symbols < K and
   multiset status on flattened ``+`` and ``*``.

Canonizing a linear term never adds K occurrences and never increases the
weight. Solving on the newest K constant removes it from the right-hand side.
Those two facts are what the completion engine relies on.

``compare`` is the partial ordering on abstracted terms: pure terms sit
below 𝒯_∅ and 𝒯_AC terms. Two 𝒯_AC terms with the same head compare first by
their number of aliens, then by the multiset extension of ``compare_x`` on the
aliens. Counting first keeps the ordering stable when both sides gain the same
sibling aliens, so ``u(b, b, c) -> k`` still decreases inside ``u(b, b, c, k1)``
even when k is newer than k1. Everything else is incomparable.
"""

from __future__ import annotations

__all__ = [
    "OrderResult",
    "TermClass",
    "is_pure_xk",
    "classify",
    "compare_x",
    "multiset_less",
    "compare",
    "step_decreases",
    "compare_or_structural",
]

import math
from enum import Enum
from functools import cmp_to_key, lru_cache
from typing import Iterable, List, Optional

from ..errors import OrderingError
from .terms import Term, aliens


class OrderResult(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"

    def flip(self) -> "OrderResult":
        if self is OrderResult.LESS:
            return OrderResult.GREATER
        if self is OrderResult.GREATER:
            return OrderResult.LESS
        return self


class TermClass(Enum):
    PURE_XK = "pure"
    T_EMPTY = "t_empty"
    T_AC = "t_ac"
    OTHER = "other"


########################################
# Classification
########################################

@lru_cache(maxsize=1 << 16)
def is_pure_xk(t: Term) -> bool:
    """Membership in 𝒯(Σ_X ∪ K)."""
    if t.is_numeral or t.is_kconst:
        return True
    if t.is_theory:
        return all(is_pure_xk(a) for a in t.args)
    return False


@lru_cache(maxsize=1 << 16)
def classify(t: Term) -> TermClass:
    if is_pure_xk(t):
        return TermClass.PURE_XK
    if t.is_uninterpreted and all(is_pure_xk(a) for a in t.args):
        return TermClass.T_EMPTY
    if t.is_ac and all(is_pure_xk(a) for a in aliens(t, t.head)):
        return TermClass.T_AC
    return TermClass.OTHER


########################################
# ≺_X on 𝒯(Σ_X ∪ K)
########################################

def _require_pure(t: Term) -> None:
    if not is_pure_xk(t):
        raise OrderingError(f"{t} is not a term over the theory symbols and K constants")


@lru_cache(maxsize=1 << 16)
def _k_profile(t: Term) -> tuple:
    """K creation indices occurring in t, sorted descending."""
    found: List[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_kconst:
            found.append(node.head.index)
        stack.extend(node.args)
    return tuple(sorted(found, reverse=True))


@lru_cache(maxsize=1 << 16)
def _weight(t: Term) -> int:
    if t.is_numeral:
        return 2 + math.ceil(abs(t.head.value))
    if t.is_kconst:
        return 2
    name = t.head.name
    ws = [_weight(a) for a in t.args]
    if name == "+":
        return ws[0] + ws[1] + 1
    if name == "*":
        return ws[0] * ws[1]
    if name == "-":
        return ws[0] + 3 * ws[1] + 2
    if name == "neg":
        return 3 * ws[0] + 1
    return sum(ws) + 1


def _precedence(t: Term) -> tuple:
    if t.is_numeral:
        return (0, t.head.value)
    if t.is_kconst:
        return (2, t.head.index)
    return (1, t.head.rank, t.head.name)


_FLAT = {"+", "*"}


def _flat_args(t: Term) -> tuple:
    if not t.is_theory or t.head.name not in _FLAT:
        return t.args
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.head == t.head:
            stack.extend(node.args)
        else:
            out.append(node)
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def _rpo(s: Term, t: Term) -> int:
    if s is t:
        return 0
    ss, ts = _flat_args(s), _flat_args(t)
    if any(_rpo(si, t) >= 0 for si in ss):
        return 1
    if any(_rpo(tj, s) >= 0 for tj in ts):
        return -1
    ps, pt = _precedence(s), _precedence(t)
    if ps != pt:
        return 1 if ps > pt else -1
    if s.is_theory and s.head.name in _FLAT:
        return _sequence_compare(_descending(ss, _rpo), _descending(ts, _rpo), _rpo)
    return _sequence_compare(list(s.args), list(t.args), _rpo)


def _descending(items: Iterable[Term], cmp) -> List[Term]:
    return sorted(items, key=cmp_to_key(cmp), reverse=True)


def _sequence_compare(xs: List[Term], ys: List[Term], cmp) -> int:
    for x, y in zip(xs, ys):
        c = cmp(x, y)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


def _compare_x_int(s: Term, t: Term) -> int:
    if s is t:
        return 0
    ks, kt = _k_profile(s), _k_profile(t)
    if ks != kt:
        return 1 if ks > kt else -1
    ws, wt = _weight(s), _weight(t)
    if ws != wt:
        return 1 if ws > wt else -1
    return _rpo(s, t)


def _to_result(c: int) -> OrderResult:
    if c < 0:
        return OrderResult.LESS
    if c > 0:
        return OrderResult.GREATER
    return OrderResult.EQUIVALENT


def compare_x(v1: Term, v2: Term) -> OrderResult:
    """Total ordering ≺_X on 𝒯(Σ_X ∪ K); never Incomparable."""
    _require_pure(v1)
    _require_pure(v2)
    return _to_result(_compare_x_int(v1, v2))


def _multiset_compare(m1: Iterable[Term], m2: Iterable[Term]) -> int:
    return _sequence_compare(
        _descending(m1, _compare_x_int), _descending(m2, _compare_x_int), _compare_x_int
    )


def _ac_compare(m1: tuple, m2: tuple) -> int:
    if len(m1) != len(m2):
        return 1 if len(m1) > len(m2) else -1
    return _multiset_compare(m1, m2)


def multiset_less(m1: Iterable[Term], m2: Iterable[Term]) -> bool:
    """Dershowitz-Manna extension of ≺_X."""
    m1, m2 = list(m1), list(m2)
    for t in m1 + m2:
        _require_pure(t)
    return _multiset_compare(m1, m2) < 0


########################################
# Partial ordering on abstracted terms
########################################

def compare(s: Term, t: Term) -> OrderResult:
    if s is t:
        return OrderResult.EQUIVALENT
    cs, ct = classify(s), classify(t)
    if cs is TermClass.OTHER or ct is TermClass.OTHER:
        bad = s if cs is TermClass.OTHER else t
        raise OrderingError(f"{bad} is not an abstracted term")
    if cs is TermClass.PURE_XK and ct is TermClass.PURE_XK:
        return _to_result(_compare_x_int(s, t))
    if cs is TermClass.PURE_XK:
        return OrderResult.LESS
    if ct is TermClass.PURE_XK:
        return OrderResult.GREATER
    if cs is TermClass.T_AC and ct is TermClass.T_AC and s.head == t.head:
        return _to_result(_ac_compare(aliens(s, s.head), aliens(t, t.head)))
    return OrderResult.INCOMPARABLE


def step_decreases(before: Term, after: Term) -> Optional[bool]:
    """Whether replacing ``before`` by ``after`` goes down, or None if either is not abstracted.

    Two 𝒯_∅ terms with the same head are incomparable under ``compare``; they
    go down when every argument is ⪯_X and at least one is ≺_X.
    """
    if before is after:
        return False
    cb, ca = classify(before), classify(after)
    if cb is TermClass.OTHER or ca is TermClass.OTHER:
        return None
    if cb is TermClass.T_EMPTY and ca is TermClass.T_EMPTY and before.head == after.head:
        steps = [_compare_x_int(x, y) for x, y in zip(after.args, before.args)]
        return all(c <= 0 for c in steps) and any(c < 0 for c in steps)
    return compare(after, before) is OrderResult.LESS


def compare_or_structural(s: Term, t: Term) -> int:
    """``compare`` as -1/0/1 where it decides, the structural order ⊴ elsewhere.

    Used to pick solver pivots; non-abstracted atoms only show up when the
    engine is driven directly on hand-built problems.
    """
    if s is t:
        return 0
    if classify(s) is not TermClass.OTHER and classify(t) is not TermClass.OTHER:
        r = compare(s, t)
        if r is OrderResult.LESS:
            return -1
        if r is OrderResult.GREATER:
            return 1
    ks, kt = s.sort_key, t.sort_key
    return (ks > kt) - (ks < kt)
