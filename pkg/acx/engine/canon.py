# acx/acx/engine/canon.py
"""
Canonizers and the solve wrapper.

Architecture Overview:
---------------------
A :class:`CanonContext` is the mutable state shared by one completion run:

- ``alpha`` / ``rho``: the bijection between foreign subterms of theory terms
  and abstraction variables. Variables are allocated lazily and never
  released, so ``rho`` stays total on everything a solver can return.
- ``k_registry`` / ``pi``: K constants and the canonical terms they name.
  ``pi`` is keyed on global canonical forms, so equal terms share one K.
- ``named``: declared constants registered as their own K constant (the
  default ``name_constants`` policy).

The three canonizers build on each other:

- :func:`can_ac` sorts AC aliens into right-leaning combs,
- :func:`global_can` additionally runs the theory canonizer on the pure part
  of every theory-headed node and maps declared constants to their K names,
- :func:`wrapped_solve` runs the theory solver on pure parts and turns the
  solved form back into rewrite rules over real terms.
"""

from __future__ import annotations

__all__ = ["CanonContext", "can_ac", "pure_part", "global_can", "wrapped_solve", "check_decreasing"]

from typing import Dict, List, Optional, Set, Tuple, Union

from ..core.ordering import step_decreases
from ..core.terms import (
    Rule, Symbol, SymbolKind, Term, aliens, apply_substitution, comb, kconst, make, var,
)
from ..errors import UnboundConstantError
from ..logger_utils import logger
from ..theories.base import BOTTOM, Bottom, ShostakTheory


class CanonContext:
    """α/ρ bijection, K registry and canonizer memo for one run."""

    def __init__(self, theory: ShostakTheory, debug_checks: bool = False):
        self.theory = theory
        self.debug_checks = debug_checks
        self.alpha: Dict[Term, Term] = {}
        self.rho: Dict[Term, Term] = {}
        self.k_registry: List[Tuple[Term, Term]] = []
        self.pi: Dict[Term, Term] = {}
        self.named: Dict[Symbol, Term] = {}
        self._k_bound: Dict[Term, Term] = {}
        self._named_ks: Set[Term] = set()
        self._next_var = 0
        self._next_k = 0
        self._next_name = 0
        self._taken_names: Set[str] = set()
        self._memo: Dict[Term, Term] = {}

    ########################################
    # Abstraction variables
    ########################################

    def alpha_of(self, t: Term) -> Term:
        x = self.alpha.get(t)
        if x is None:
            x = var(self._next_var)
            self._next_var += 1
            self.alpha[t] = x
            self.rho[x] = t
        return x

    def image(self, atom: Term) -> Term:
        """ρ on variables, identity on everything else."""
        if atom.is_var:
            return self.rho[atom]
        return atom

    ########################################
    # K constants
    ########################################

    def reserve_names(self, names) -> None:
        self._taken_names.update(names)

    def _fresh_k(self, name: Optional[str]) -> Term:
        if name is None:
            n = self._next_name + 1
            while f"k{n}" in self._taken_names:
                n += 1
            self._next_name = n
            name = f"k{n}"
        self._taken_names.add(name)
        k = kconst(name, self._next_k)
        self._next_k += 1
        return k

    def name_constant(self, symbol: Symbol) -> Term:
        """Register a declared constant as its own K constant."""
        k = self.named.get(symbol)
        if k is None:
            k = self._fresh_k(symbol.name)
            term = make(symbol)
            self.named[symbol] = k
            self._named_ks.add(k)
            self.k_registry.append((k, term))
            self._k_bound[k] = term
            self.pi[term] = k
            self._memo.pop(term, None)
        return k

    def abstraction_constant(self, t: Term) -> Tuple[Term, bool]:
        """π(t) for a canonical t, creating a K constant on first use."""
        k = self.pi.get(t)
        if k is not None:
            return k, False
        k = self._fresh_k(None)
        self.pi[t] = k
        self.k_registry.append((k, t))
        self._k_bound[k] = t
        return k, True

    def binding(self, k: Term) -> Term:
        try:
            return self._k_bound[k]
        except KeyError:
            raise UnboundConstantError(f"K constant {k} has no binding") from None

    def is_abstraction_k(self, t: Term) -> bool:
        """K constants introduced by abstraction, as opposed to named declared constants."""
        return t.is_kconst and t in self._k_bound and t not in self._named_ks

    @property
    def k_count(self) -> int:
        return self._next_k


########################################
# can_AC
########################################

def can_ac(t: Term) -> Term:
    """AC canonizer: children first, then ⊴-sorted right combs for AC heads."""
    head = t.head
    if not isinstance(head, Symbol) or not t.args:
        return t
    kids = [can_ac(a) for a in t.args]
    if head.kind is SymbolKind.AC:
        return comb(head, _merge_aliens(head, kids))
    return make(head, kids)


def _merge_aliens(u: Symbol, kids) -> list:
    merged = []
    for k in kids:
        merged.extend(aliens(k, u))
    return merged


########################################
# Pure part and global canonizer
########################################

def pure_part(t: Term, ctx: CanonContext) -> Term:
    """[t]: theory nodes kept, maximal foreign subterms replaced by α."""
    if t.is_numeral or t.is_kconst or t.is_var:
        return t
    if t.is_theory:
        kids = [pure_part(a, ctx) for a in t.args]
        if all(x is y for x, y in zip(kids, t.args)):
            return t
        return make(t.head, kids)
    return ctx.alpha_of(t)


def global_can(t: Term, ctx: CanonContext) -> Term:
    memo = ctx._memo
    hit = memo.get(t)
    if hit is not None:
        return hit
    head = t.head
    if not isinstance(head, Symbol):
        result = t
    elif head.kind is SymbolKind.UNINTERPRETED:
        if not t.args and head in ctx.named:
            result = ctx.named[head]
        else:
            result = make(head, [global_can(a, ctx) for a in t.args])
    elif head.kind is SymbolKind.AC:
        kids = [global_can(a, ctx) for a in t.args]
        result = comb(head, _merge_aliens(head, kids))
    else:
        kids = [global_can(a, ctx) for a in t.args]
        pure = pure_part(make(head, kids), ctx)
        result = apply_substitution(ctx.theory.canonize(pure, ctx), ctx.rho)
    memo[t] = result
    memo.setdefault(result, result)
    return result


########################################
# Solve wrapper
########################################

def wrapped_solve(s: Term, t: Term, ctx: CanonContext) -> Union[Bottom, List[Rule]]:
    """Bottom, or rules ρ(x_i) → can(ρ(t_i)) for the solved form of [s] = [t]."""
    result = ctx.theory.solve(pure_part(s, ctx), pure_part(t, ctx), ctx)
    if isinstance(result, Bottom):
        return BOTTOM
    rules = []
    for x, v in result.pairs:
        lhs = ctx.image(x)
        rhs = global_can(apply_substitution(v, ctx.rho), ctx)
        rules.append(Rule(lhs, rhs))
        if ctx.debug_checks:
            check_decreasing(lhs, rhs, "solved rule")
    return rules


def check_decreasing(before: Term, after: Term, what: str) -> None:
    """Raise AssertionError unless after is below before; unabstracted terms are skipped."""
    if step_decreases(before, after) is False:
        logger.error("%(what)s %(before)s → %(after)s is not decreasing",
                     {"what": what, "before": before, "after": after})
        raise AssertionError(f"{what} {before} → {after} is not decreasing")
