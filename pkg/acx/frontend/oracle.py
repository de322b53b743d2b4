# acx/acx/frontend/oracle.py
"""
Bounded-saturation oracle.

An independent check for the completion engine on small problems. It never
orients anything: it keeps a union-find over a growing universe of
canonical terms and closes it, round by round, under

- the hypotheses,
- congruence for free function symbols (signature table on class ids),
- AC congruence (same head, same multiset of alien classes),
- AC replacement: an alien, or a sub-multiset equal to a known AC term, is
  replaced by another member of its class,
- for linear arithmetic, a solved form of all class equalities over class
  representatives (Gaussian elimination over the rationals); terms whose
  polynomials agree under it are merged.

A non-zero constant difference inside one class makes the hypotheses
inconsistent, and then every goal is derivable.

The universe is capped both in term size and term count. The answer is
NOT_DERIVABLE only when a round changes nothing and no cap ever refused a
term; otherwise a goal that did not join is NOT_WITHIN_BOUND.
"""

from __future__ import annotations

__all__ = ["OracleResult", "SaturationOracle", "oracle_derivable"]

from collections import Counter
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Union

from ..core.terms import Equation, Term, aliens, comb
from ..engine.canon import CanonContext, global_can, pure_part
from ..logger_utils import logger
from ..theories import ShostakTheory, get_theory
from ..theories.lia import Polynomial


class OracleResult(Enum):
    DERIVABLE = "derivable"
    NOT_DERIVABLE = "not_derivable"
    NOT_WITHIN_BOUND = "not_within_bound"


class SaturationOracle:
    """Union-find over canonical terms, saturated in bounded rounds."""

    def __init__(self, theory: Union[str, ShostakTheory] = "empty", bound: int = 10, max_terms: int = 4000):
        self.theory = get_theory(theory) if isinstance(theory, str) else theory
        self.ctx = CanonContext(self.theory)
        self.bound = bound
        self.max_terms = max_terms
        self.size_cap = 8
        self.inconsistent = False
        self._parent: Dict[Term, Term] = {}
        self._members: Dict[Term, List[Term]] = {}
        self._capped = False
        self._refused = False
        self.saturated = False

    ########################################
    # Union-find
    ########################################

    def find(self, t: Term) -> Term:
        root = t
        while self._parent[root] is not root:
            root = self._parent[root]
        while self._parent[t] is not root:
            self._parent[t], t = root, self._parent[t]
        return root

    def union(self, s: Term, t: Term) -> bool:
        rs, rt = self.find(s), self.find(t)
        if rs is rt:
            return False
        if len(self._members[rs]) < len(self._members[rt]):
            rs, rt = rt, rs
        self._parent[rt] = rs
        self._members[rs].extend(self._members.pop(rt))
        return True

    def members(self, t: Term) -> List[Term]:
        return list(self._members[self.find(t)])

    def same_class(self, s: Term, t: Term) -> bool:
        return self.find(s) is self.find(t)

    def __len__(self) -> int:
        return len(self._parent)

    ########################################
    # Universe
    ########################################

    def _children(self, t: Term) -> Iterable[Term]:
        if t.is_ac:
            return aliens(t, t.head)
        if t.is_theory:
            return self._atoms(t)
        return t.args

    def _atoms(self, t: Term) -> List[Term]:
        poly = Polynomial.from_term(pure_part(t, self.ctx))
        return [self.ctx.image(a) for a in poly.monomials]

    def add(self, t: Term) -> Optional[Term]:
        """Add a canonical term and its subterms; None when a cap refuses it."""
        if t in self._parent:
            return t
        if t.size > self.size_cap:
            self._refused = True
            return None
        if len(self._parent) >= self.max_terms:
            self._refused = True
            if not self._capped:
                logger.warning("oracle term cap of %(cap)s reached", {"cap": self.max_terms})
                self._capped = True
            return None
        for child in self._children(t):
            if self.add(child) is None:
                return None
        self._parent[t] = t
        self._members[t] = [t]
        return t

    def canonical(self, t: Term) -> Term:
        return global_can(t, self.ctx)

    def assume(self, equations: Iterable[Equation]) -> None:
        for eq in equations:
            s, t = self.canonical(eq.lhs), self.canonical(eq.rhs)
            self.size_cap = max(self.size_cap, 2 * max(s.size, t.size) + 2)
            self.add(s)
            self.add(t)
            self.union(s, t)

    def _merge(self, t: Term, new: Term) -> bool:
        if self.add(new) is None:
            return False
        return self.union(t, new)

    ########################################
    # Closure rules
    ########################################

    def _congruence(self) -> bool:
        changed = False
        table: Dict[tuple, Term] = {}
        for t in list(self._parent):
            if t.is_uninterpreted and t.args:
                key = (t.head, tuple(self.find(a) for a in t.args))
            elif t.is_ac:
                key = (t.head, tuple(sorted((self.find(a) for a in aliens(t, t.head)), key=lambda r: r.sort_key)))
            else:
                continue
            seen = table.get(key)
            if seen is None:
                table[key] = t
            elif self.union(seen, t):
                changed = True
        return changed

    def _ac_replacement(self) -> bool:
        changed = False
        ac_terms = [t for t in self._parent if t.is_ac]
        by_head: Dict[object, List[Term]] = {}
        for t in ac_terms:
            by_head.setdefault(t.head, []).append(t)
        for t in ac_terms:
            u = t.head
            own = Counter(aliens(t, u))
            for a in list(own):
                rest = own.copy()
                rest[a] -= 1
                for m in self.members(a):
                    if m is not a:
                        changed |= self._merge(t, comb(u, list(rest.elements()) + list(aliens(m, u))))
            for s in by_head[u]:
                if s is t:
                    continue
                part = Counter(aliens(s, u))
                if any(own[x] < n for x, n in part.items()) or sum(part.values()) >= sum(own.values()):
                    continue
                rest = list((own - part).elements())
                for m in self.members(s):
                    if m is not s:
                        changed |= self._merge(t, comb(u, rest + list(aliens(m, u))))
        return changed

    def _poly(self, t: Term) -> Polynomial:
        """t as a linear combination of class representatives."""
        if not (t.is_theory or t.is_numeral):
            return Polynomial({self.find(t): Fraction(1)})
        raw = Polynomial.from_term(pure_part(t, self.ctx))
        out = Polynomial({}, raw.constant)
        for a, c in raw.monomials.items():
            out = out + Polynomial({self.find(self.ctx.image(a)): c})
        return out

    @staticmethod
    def _reduce(p: Polynomial, solved: Dict[Term, Polynomial]) -> Polynomial:
        out = Polynomial({}, p.constant)
        for a, c in p.monomials.items():
            out = out + (solved[a].scale(c) if a in solved else Polynomial({a: c}))
        return out

    def _solved_form(self) -> Optional[Dict[Term, Polynomial]]:
        """Gaussian elimination over every class equality; None when they are inconsistent."""
        solved: Dict[Term, Polynomial] = {}
        for group in list(self._members.values()):
            if len(group) < 2:
                continue
            base = self._reduce(self._poly(group[0]), solved)
            for m in group[1:]:
                diff = self._reduce(self._poly(m), solved) - base
                if diff.is_constant:
                    if diff.constant != 0:
                        return None
                    continue
                x = max(diff.monomials, key=lambda a: a.sort_key)
                value = diff.without(x).scale(Fraction(-1) / diff.monomials[x])
                for y, p in list(solved.items()):
                    c = p.monomials.get(x)
                    if c:
                        solved[y] = p.without(x) + value.scale(c)
                solved[x] = value
        return solved

    def _linear_closure(self) -> bool:
        """Merge every two terms whose polynomials agree under the solved form."""
        solved = self._solved_form()
        if solved is None:
            self.inconsistent = True
            return True
        changed = False
        seen: Dict[Polynomial, Term] = {}
        for t in list(self._parent):
            key = self._reduce(self._poly(t), solved)
            first = seen.setdefault(key, t)
            if first is not t:
                changed |= self.union(first, t)
        return changed

    ########################################
    # Driver
    ########################################

    def _joined(self, goals: Sequence[Equation]) -> bool:
        return all(self.same_class(g.lhs, g.rhs) for g in goals)

    def saturate(self, goals: Sequence[Equation]) -> bool:
        """Run at most ``bound`` rounds; True once every goal is derived."""
        goals = [Equation(self.canonical(g.lhs), self.canonical(g.rhs)) for g in goals]
        for g in goals:
            self.size_cap = max(self.size_cap, 2 * max(g.lhs.size, g.rhs.size) + 2)
        for g in goals:
            if self.add(g.lhs) is None or self.add(g.rhs) is None:
                logger.warning("oracle cannot hold goal %(goal)s", {"goal": g})
                return False
        for rnd in range(self.bound):
            if self.inconsistent or self._joined(goals):
                return True
            changed = self._congruence()
            changed |= self._ac_replacement()
            if self.theory.has_numerals:
                changed |= self._linear_closure()
            logger.debug("oracle round %(round)s: %(terms)s terms", {"round": rnd + 1, "terms": len(self)})
            if not changed:
                self.saturated = not self._refused
                break
        return self.inconsistent or self._joined(goals)


def oracle_derivable(E0: Sequence[Equation], goal: Union[Equation, Sequence[Equation]],
                     bound: int = 10, theory: Union[str, ShostakTheory] = "empty",
                     max_terms: int = 4000) -> OracleResult:
    """DERIVABLE when every goal equation joins within ``bound`` rounds.

    NOT_DERIVABLE when the closure reached a fixpoint without either cap
    refusing a term, NOT_WITHIN_BOUND otherwise.
    """
    goals = [goal] if isinstance(goal, Equation) else list(goal)
    oracle = SaturationOracle(theory, bound, max_terms)
    oracle.assume(E0)
    if oracle.saturate(goals):
        return OracleResult.DERIVABLE
    if oracle.saturated:
        return OracleResult.NOT_DERIVABLE
    return OracleResult.NOT_WITHIN_BOUND
