# acx/acx/engine/rewrite.py
"""
Ground rewriting modulo AC and canonized rewriting.

A rule l → r applies at a position p of a canonical term s when
``s|_p`` is ``l`` itself (plain) or, for an AC-headed ``l``, when the aliens
of ``l`` are a strict sub-multiset of the aliens of ``s|_p`` (extension). An
extension step replaces the matched aliens by the aliens of ``r`` and keeps
the remainder. Canonized rewriting re-canonizes the whole term after each
step.

Positions inside an AC comb that are not maximal (their parent has the same
AC head) are never tried: the maximal node sees a superset of their aliens.

With ``debug_checks`` on, every step is checked to go down in the ordering
at the rewritten position.
"""

from __future__ import annotations

__all__ = [
    "MatchKind",
    "MatchOutcome",
    "NO_MATCH",
    "RuleSet",
    "IndexedRule",
    "ac_match_at",
    "rewrite_ac",
    "rewrite_once",
    "can_rewrite_step",
    "normal_form",
    "Normalizer",
]

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from ..core.terms import (
    Position, Rule, Symbol, Term, aliens, comb, is_submultiset, make, replace_at, subterm_at,
)
from ..errors import BudgetExceededError
from .canon import CanonContext, check_decreasing, global_can


class MatchKind(Enum):
    NO_MATCH = "no_match"
    PLAIN = "plain"
    EXTENDED = "extended"


@dataclass(frozen=True)
class MatchOutcome:
    kind: MatchKind
    remainder: Tuple[Term, ...] = ()

    def __bool__(self) -> bool:
        return self.kind is not MatchKind.NO_MATCH


NO_MATCH = MatchOutcome(MatchKind.NO_MATCH)
PLAIN = MatchOutcome(MatchKind.PLAIN)


@lru_cache(maxsize=1 << 16)
def _alien_bag(t: Term) -> Tuple[Counter, int]:
    """Alien multiset of an AC-headed term and its size. Callers must not mutate it."""
    found = aliens(t, t.head)
    return Counter(found), len(found)


@lru_cache(maxsize=1 << 16)
def _heads(t: Term) -> FrozenSet[Symbol]:
    out = {t.head}
    for a in t.args:
        out |= _heads(a)
    return frozenset(out)


@dataclass
class IndexedRule:
    """A rule plus its identifier and, for AC-headed lhs, the lhs alien multiset."""
    ident: int
    rule: Rule
    lhs_aliens: Optional[Counter] = field(default=None, repr=False)
    lhs_size: int = field(default=0, repr=False)

    @classmethod
    def of(cls, ident: int, rule: Rule) -> "IndexedRule":
        if not rule.lhs.is_ac:
            return cls(ident, rule)
        bag, size = _alien_bag(rule.lhs)
        return cls(ident, rule, bag, size)

    @property
    def lhs(self) -> Term:
        return self.rule.lhs

    @property
    def rhs(self) -> Term:
        return self.rule.rhs

    def match(self, node: Term) -> MatchOutcome:
        """Plain or extended match of this rule's lhs at the root of node."""
        if node is self.rule.lhs:
            return PLAIN
        if self.lhs_aliens is None or not node.is_ac or node.head != self.rule.lhs.head:
            return NO_MATCH
        sub, size = _alien_bag(node)
        if size <= self.lhs_size or not is_submultiset(self.lhs_aliens, sub):
            return NO_MATCH
        rest = sub - self.lhs_aliens
        return MatchOutcome(MatchKind.EXTENDED, tuple(sorted(rest.elements(), key=lambda t: t.sort_key)))


def _match(sub: Term, lhs: Term) -> MatchOutcome:
    return IndexedRule.of(-1, Rule(lhs, lhs)).match(sub)


def ac_match_at(s: Term, p: Position, lhs: Term) -> MatchOutcome:
    return _match(subterm_at(s, p), lhs)


def _reduct(sub: Term, rule: Rule, outcome: MatchOutcome) -> Term:
    if outcome.kind is MatchKind.PLAIN:
        return rule.rhs
    u = rule.lhs.head
    return comb(u, list(aliens(rule.rhs, u)) + list(outcome.remainder))


def rewrite_ac(s: Term, rule: Rule, p: Position) -> Optional[Term]:
    """One AC step at p, or None when the rule does not match there."""
    sub = subterm_at(s, p)
    outcome = _match(sub, rule.lhs)
    if not outcome:
        return None
    return replace_at(s, p, _reduct(sub, rule, outcome))


def _canonized_step(node: Term, rule: Rule, outcome: MatchOutcome, ctx: CanonContext) -> Term:
    after = global_can(_reduct(node, rule, outcome), ctx)
    if ctx.debug_checks:
        check_decreasing(node, after, "rewrite step")
    return after


########################################
# Rule index
########################################

class RuleSet:
    """Rules in insertion order, indexed by exact lhs and by AC head symbol.

    ``generation`` changes whenever the set does, so callers can keep
    normal forms computed against one generation.
    """

    def __init__(self, rules: Iterable[Union[Rule, IndexedRule]] = ()):
        self._rules: Dict[int, IndexedRule] = {}
        self._by_lhs: Dict[Term, int] = {}
        self._by_head: Dict[Symbol, Dict[int, IndexedRule]] = {}
        self._next = 0
        self.generation = 0
        for r in rules:
            if isinstance(r, IndexedRule):
                self.add(r.rule, r.ident)
            else:
                self.add(r)

    def add(self, rule: Rule, ident: Optional[int] = None) -> IndexedRule:
        if ident is None:
            ident = self._next
        self._next = max(self._next, ident + 1)
        entry = IndexedRule.of(ident, rule)
        self._rules[ident] = entry
        self._by_lhs.setdefault(rule.lhs, ident)
        if rule.lhs.is_ac:
            self._by_head.setdefault(rule.lhs.head, {})[ident] = entry
        self.generation += 1
        return entry

    def remove(self, ident: int) -> IndexedRule:
        entry = self._rules.pop(ident)
        if self._by_lhs.get(entry.lhs) == ident:
            del self._by_lhs[entry.lhs]
            for other in self._rules.values():
                if other.lhs is entry.lhs:
                    self._by_lhs[entry.lhs] = other.ident
                    break
        if entry.lhs.is_ac:
            self._by_head[entry.lhs.head].pop(ident, None)
        self.generation += 1
        return entry

    def replace_rhs(self, ident: int, rhs: Term) -> IndexedRule:
        entry = self._rules[ident]
        entry.rule = Rule(entry.lhs, rhs)
        self.generation += 1
        return entry

    def get(self, ident: int) -> IndexedRule:
        return self._rules[ident]

    def __contains__(self, ident: int) -> bool:
        return ident in self._rules

    def __iter__(self) -> Iterator[IndexedRule]:
        return iter(list(self._rules.values()))

    def __len__(self) -> int:
        return len(self._rules)

    def rules(self) -> List[Rule]:
        return [e.rule for e in self._rules.values()]

    def ac_rules(self, u: Symbol) -> List[IndexedRule]:
        return list(self._by_head.get(u, {}).values())

    def first_match(self, node: Term) -> Optional[Tuple[IndexedRule, MatchOutcome]]:
        """First rule (insertion order) applicable at the root of node."""
        if node.is_ac:
            for entry in self._by_head.get(node.head, {}).values():
                outcome = entry.match(node)
                if outcome:
                    return entry, outcome
            return None
        ident = self._by_lhs.get(node)
        if ident is None:
            return None
        return self._rules[ident], PLAIN


def _as_rule_set(R) -> RuleSet:
    return R if isinstance(R, RuleSet) else RuleSet(R)


def _redex_positions(s: Term) -> Iterator[Tuple[Position, Term]]:
    """Innermost-leftmost positions, skipping non-maximal AC comb nodes."""
    stack: list = [((), s, None, False)]
    while stack:
        pos, node, parent_head, expanded = stack.pop()
        if expanded or not node.args:
            if not (node.is_ac and parent_head == node.head):
                yield pos, node
            continue
        stack.append((pos, node, parent_head, True))
        for i in range(len(node.args) - 1, -1, -1):
            stack.append((pos + (i,), node.args[i], node.head, False))


def can_rewrite_step(s: Term, R, ctx: CanonContext) -> Optional[Tuple[Term, Rule, Position]]:
    """One canonized rewrite step: (can(reduct), rule, position), or None if s is R-irreducible."""
    rules = _as_rule_set(R)
    for pos, node in _redex_positions(s):
        found = rules.first_match(node)
        if found is None:
            continue
        entry, outcome = found
        after = _canonized_step(node, entry.rule, outcome, ctx)
        return global_can(replace_at(s, pos, after), ctx), entry.rule, pos
    return None


def rewrite_once(s: Term, entry: IndexedRule, ctx: CanonContext) -> Optional[Tuple[Term, Position]]:
    """``can_rewrite_step`` with a single rule: (can(reduct), position) or None."""
    if entry.lhs.head not in _heads(s):
        return None
    for pos, node in _redex_positions(s):
        outcome = entry.match(node)
        if outcome:
            after = _canonized_step(node, entry.rule, outcome, ctx)
            return global_can(replace_at(s, pos, after), ctx), pos
    return None


########################################
# Normal forms
########################################

class Normalizer:
    """Bottom-up normalizer with a per-instance cache and step budget.

    ``used`` collects the identifiers of the rules that fired, in first-use
    order, since the last :meth:`reset`. Cache entries remember the rules
    behind each normal form, so a cache hit still reports them. The step
    budget applies to each top-level call.
    """

    def __init__(self, rules: RuleSet, ctx: CanonContext, budget: int = 100_000):
        self.rules = rules
        self.ctx = ctx
        self.budget = budget
        self.generation = rules.generation
        self.steps = 0
        self.used: List[int] = []
        self._cache: Dict[Term, Tuple[Term, Tuple[int, ...]]] = {}

    def __call__(self, t: Term) -> Term:
        return self.normalize(t)

    @property
    def stale(self) -> bool:
        return self.generation != self.rules.generation

    def reset(self) -> "Normalizer":
        self.used = []
        return self

    def normalize(self, t: Term) -> Term:
        self.steps = 0
        nf, fired = self._nf(t)
        for ident in fired:
            if ident not in self.used:
                self.used.append(ident)
        return nf

    def _nf(self, t: Term) -> Tuple[Term, Tuple[int, ...]]:
        hit = self._cache.get(t)
        if hit is not None:
            return hit
        fired: List[int] = []
        cur = self._normalize_below(t, fired)
        while True:
            found = self.rules.first_match(cur)
            if found is None:
                break
            entry, outcome = found
            self._count()
            if entry.ident not in fired:
                fired.append(entry.ident)
            cur = self._normalize_below(_canonized_step(cur, entry.rule, outcome, self.ctx), fired)
        result = (cur, tuple(fired))
        self._cache[t] = result
        self._cache.setdefault(cur, (cur, ()))
        return result

    def _count(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError("normal form", self.budget)

    def _child(self, t: Term, fired: List[int]) -> Term:
        nf, used = self._nf(t)
        for ident in used:
            if ident not in fired:
                fired.append(ident)
        return nf

    def _normalize_below(self, t: Term, fired: List[int]) -> Term:
        if not t.args:
            return t
        if t.is_ac:
            u = t.head
            old = aliens(t, u)
            new = [self._child(a, fired) for a in old]
            if all(x is y for x, y in zip(new, old)):
                return t
            merged = []
            for a in new:
                merged.extend(aliens(a, u))
            return comb(u, merged)
        kids = [self._child(a, fired) for a in t.args]
        if all(x is y for x, y in zip(kids, t.args)):
            return t
        return global_can(make(t.head, kids), self.ctx)


def normal_form(s: Term, R, ctx: CanonContext, budget: int = 100_000) -> Term:
    """s↓_R under canonized rewriting."""
    return Normalizer(_as_rule_set(R), ctx, budget).normalize(s)
