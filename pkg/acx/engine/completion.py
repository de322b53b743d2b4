# acx/acx/engine/completion.py
"""
CompletionEngine: Ground AC Completion Modulo a Shostak Theory
==============================================================

Architecture Overview:
---------------------
The engine maintains a configuration ⟨E | R⟩: a FIFO worklist ``E`` of
equations and an indexed rule set ``R``. Each equation taken from ``E`` goes
through the strategy

    Sim* (Tri | Bot | (Ori (Com Col Ded)*))

- **Simplify**: both sides are rewritten to normal form with canonized
  rewriting; one ``Sim`` row records the rules used.
- **Trivial**: identical sides are dropped.
- **Bottom**: the theory solver reports an inconsistency; the run stops.
- **Orient**: the solver's solved form becomes rules (``wrapped_solve``).
- For every new rule g → d:

  - **Compose**: right-hand sides d' reducible by g → d are normalized,
  - **Collapse**: rules l → r whose lhs g → d reduces are removed when
    ``g ≺ l`` or ``g ≃ l ∧ d ≺ r``, and the reduced ``l' ≈ r`` is queued,
  - **Deduce**: head critical pairs with every other AC rule are queued.

Key Design Principles:
- **Manager delegation pattern**: the facade owns the state and delegates to
  Simplifier, InterReducer and CriticalPairs.
- **Fairness**: new equations go to the back of the queue and Orient only sees
  fully simplified equations.
- **Budgets**: every inference counts against ``inference_budget``; every
  rewrite step against ``normal_form_budget``.

Results:
-------
``complete`` returns :class:`FinalSystem` (convergent, inter-reduced rules
plus the trace) or :class:`Inconsistent`. ``decide`` abstracts the input and
the goals, completes once and compares normal forms.
"""

from __future__ import annotations

__all__ = [
    "Status",
    "PendingEquation",
    "CompletionState",
    "CompletionEngine",
    "FinalSystem",
    "Inconsistent",
    "GoalVerdict",
    "Verdict",
    "head_cp",
    "process_equation",
    "complete",
    "decide",
]

import time
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Deque, List, Optional, Sequence, Tuple, Union

from ..config import DEFAULT_PROVER_CONFIG, _ProverConfigInternal
from ..core.ordering import OrderResult, compare
from ..core.terms import Equation, Rule, Term, aliens, comb
from ..errors import BudgetExceededError, OrderingError
from ..logger_utils import logger
from ..theories.base import Bottom
from .canon import CanonContext, global_can, wrapped_solve
from .preprocess import AbstractionRun, abstract_equations
from .rewrite import IndexedRule, Normalizer, RuleSet, rewrite_once
from .trace import CompletionTrace, Inference


class Status(Enum):
    RUNNING = "running"
    DONE = "done"
    INCONSISTENT = "inconsistent"


@dataclass
class PendingEquation:
    """An equation waiting in E, with the trace step that produced it (None for input)."""
    equation: Equation
    origin: Optional[int] = None

    @property
    def label(self) -> str:
        return str(self.origin) if self.origin is not None else str(self.equation)


@dataclass
class CompletionState:
    E: Deque[PendingEquation] = field(default_factory=deque)
    R: RuleSet = field(default_factory=RuleSet)
    trace: CompletionTrace = field(default_factory=CompletionTrace)
    status: Status = Status.RUNNING
    inferences: int = 0


@dataclass
class FinalSystem:
    """Convergent, inter-reduced result of a completion run."""
    rules: List[Rule]
    naming_rules: List[Rule]
    trace: CompletionTrace
    rule_set: RuleSet
    inferences: int = 0

    @property
    def all_rules(self) -> List[Rule]:
        return self.rule_set.rules()


@dataclass
class Inconsistent:
    trace: CompletionTrace
    inferences: int = 0


CompletionResult = Union[FinalSystem, Inconsistent]


@dataclass
class GoalVerdict:
    goal: Equation
    valid: bool
    lhs_normal_form: Optional[Term] = None
    rhs_normal_form: Optional[Term] = None


@dataclass
class Verdict:
    """Outcome of ``decide``: valid iff every goal is (or the hypotheses are inconsistent)."""
    valid: bool
    inconsistent: bool
    goals: List[GoalVerdict]
    result: CompletionResult
    run: AbstractionRun
    elapsed_ms: int = 0

    @property
    def label(self) -> str:
        if self.inconsistent:
            return "valid (inconsistent hypotheses)"
        return "valid" if self.valid else "invalid"


########################################
# Critical pairs
########################################

def head_cp(r1: Rule, r2: Rule, ctx: CanonContext) -> Optional[Equation]:
    """Head critical pair of two rules with the same AC head, if their lhs overlap properly."""
    l1, l2 = r1.lhs, r2.lhs
    if not (l1.is_ac and l2.is_ac and l1.head == l2.head):
        return None
    u = l1.head
    a1, a2 = Counter(aliens(l1, u)), Counter(aliens(l2, u))
    common = a1 & a2
    b1, b2 = a1 - common, a2 - common
    if not common or not b1 or not b2:
        return None
    left = comb(u, list(b1.elements()) + list(aliens(r2.rhs, u)))
    right = comb(u, list(b2.elements()) + list(aliens(r1.rhs, u)))
    return Equation(global_can(left, ctx), global_can(right, ctx))


########################################
# Managers
########################################

class Simplifier:
    """Simplify: both sides to normal form with the current rules."""

    def __init__(self, engine: "CompletionEngine"):
        self.engine = engine
        self._normalizer: Optional[Normalizer] = None

    def normalizer(self) -> Normalizer:
        """A normalizer for the current rules, reused while they stay unchanged."""
        e = self.engine
        norm = self._normalizer
        if norm is None or norm.rules is not e.state.R or norm.stale:
            norm = self._normalizer = Normalizer(e.state.R, e.ctx, e.config.normal_form_budget)
        return norm.reset()

    def simplify(self, eq: Equation) -> Tuple[Equation, List[int]]:
        norm = self.normalizer()
        lhs, rhs = norm(eq.lhs), norm(eq.rhs)
        return Equation(lhs, rhs), norm.used


class InterReducer:
    """Compose and Collapse against a newly oriented rule."""

    def __init__(self, engine: "CompletionEngine"):
        self.engine = engine

    def compose(self, new: IndexedRule) -> None:
        e = self.engine
        R = e.state.R
        for entry in R:
            if entry.ident == new.ident:
                continue
            if rewrite_once(entry.rhs, new, e.ctx) is None:
                continue
            e.tick()
            rhs = e.simplifier.normalizer()(entry.rhs)
            R.remove(entry.ident)
            composed = Rule(entry.lhs, rhs)
            step = e.state.trace.add(
                Inference.COMPOSE, composed, f"Com {entry.ident} and {new.ident}", (entry.ident, new.ident)
            )
            R.add(composed, step)
            logger.debug("Com %(old)s and %(new)s: %(rule)s",
                         {"old": entry.ident, "new": new.ident, "rule": composed})

    def collapse(self, new: IndexedRule) -> None:
        e = self.engine
        R = e.state.R
        for entry in R:
            if entry.ident == new.ident or entry.ident not in R:
                continue
            step = rewrite_once(entry.lhs, new, e.ctx)
            if step is None:
                continue
            if not self._guard(new.rule, entry.rule):
                logger.debug("Col %(old)s and %(new)s blocked by ordering guard",
                             {"old": entry.ident, "new": new.ident})
                continue
            e.tick()
            R.remove(entry.ident)
            eq = Equation(step[0], entry.rhs)
            s = e.state.trace.add(
                Inference.COLLAPSE, eq, f"Col {entry.ident} and {new.ident}", (entry.ident, new.ident)
            )
            e.state.E.append(PendingEquation(eq, s))
            logger.debug("Col %(old)s and %(new)s: %(eq)s", {"old": entry.ident, "new": new.ident, "eq": eq})

    @staticmethod
    def _guard(g: Rule, l: Rule) -> bool:
        try:
            order = compare(g.lhs, l.lhs)
            if order is OrderResult.LESS:
                return True
            return order is OrderResult.EQUIVALENT and compare(g.rhs, l.rhs) is OrderResult.LESS
        except OrderingError:
            return False


class CriticalPairs:
    """Deduce: head critical pairs between the new rule and every rule of R."""

    def __init__(self, engine: "CompletionEngine"):
        self.engine = engine

    def deduce(self, new: IndexedRule) -> None:
        e = self.engine
        if not new.lhs.is_ac or new.ident not in e.state.R:
            return
        for entry in e.state.R.ac_rules(new.lhs.head):
            if entry.ident == new.ident:
                continue
            cp = head_cp(new.rule, entry.rule, e.ctx)
            if cp is None:
                continue
            e.tick()
            s = e.state.trace.add(
                Inference.DEDUCE, cp, f"Ded {entry.ident} and {new.ident}", (entry.ident, new.ident)
            )
            e.state.E.append(PendingEquation(cp, s))


########################################
# Facade
########################################

class CompletionEngine:
    """One completion run over one canonizer context."""

    def __init__(self, ctx: CanonContext, config: Optional[_ProverConfigInternal] = None):
        self.ctx = ctx
        self.config = config if config is not None else DEFAULT_PROVER_CONFIG.copy()
        self.state = CompletionState(trace=CompletionTrace(enabled=self.config.record_trace))
        self.simplifier = Simplifier(self)
        self.inter_reducer = InterReducer(self)
        self.critical_pairs = CriticalPairs(self)
        if self.config.debug_checks:
            ctx.debug_checks = True

    ########################################
    # Worklist
    ########################################

    def add_equations(self, equations: Sequence[Equation]) -> "CompletionEngine":
        for eq in equations:
            canonical = Equation(global_can(eq.lhs, self.ctx), global_can(eq.rhs, self.ctx))
            self.state.E.append(PendingEquation(canonical))
        return self

    def tick(self) -> None:
        self.state.inferences += 1
        if self.state.inferences > self.config.inference_budget:
            raise BudgetExceededError("inference", self.config.inference_budget)

    ########################################
    # Inferences
    ########################################

    def process(self, pending: PendingEquation) -> None:
        st = self.state
        self.tick()
        simplified, used = self.simplifier.simplify(pending.equation)
        if used:
            step = st.trace.add(
                Inference.SIMPLIFY, simplified,
                f"Sim {pending.label} by {' and '.join(str(i) for i in used)}", tuple(used),
            )
            pending = PendingEquation(simplified, step)

        s, t = simplified.lhs, simplified.rhs
        if s is t:
            st.trace.add(Inference.TRIVIAL, simplified, f"Tri {pending.label}")
            return

        solved = wrapped_solve(s, t, self.ctx)
        if isinstance(solved, Bottom):
            st.trace.add(Inference.BOTTOM, simplified, f"Bot {pending.label}")
            st.status = Status.INCONSISTENT
            logger.debug("Bot %(eq)s: hypotheses are inconsistent", {"eq": simplified})
            return
        if not solved:
            st.trace.add(Inference.TRIVIAL, simplified, f"Tri {pending.label}")
            return

        for rule in solved:
            rhs = self.simplifier.normalizer()(rule.rhs)
            if rhs is rule.lhs:
                continue
            oriented = Rule(rule.lhs, rhs)
            self.tick()
            step = st.trace.add(Inference.ORIENT, oriented, f"Ori {pending.label}")
            new = st.R.add(oriented, step)
            logger.debug("Ori %(step)s: %(rule)s", {"step": step, "rule": oriented})
            self.inter_reducer.compose(new)
            self.inter_reducer.collapse(new)
            self.critical_pairs.deduce(new)

    def run(self) -> CompletionResult:
        st = self.state
        while st.E and st.status is Status.RUNNING:
            self.process(st.E.popleft())
        if st.status is Status.INCONSISTENT:
            return Inconsistent(st.trace, st.inferences)
        st.status = Status.DONE
        return self.final_system()

    def final_system(self) -> FinalSystem:
        st = self.state
        core, naming = [], []
        for entry in st.R:
            (naming if self._is_naming_rule(entry.rule) else core).append(entry.rule)
        st.trace.mark_persistent(entry.ident for entry in st.R)
        return FinalSystem(core, naming, st.trace, st.R, st.inferences)

    def _is_naming_rule(self, rule: Rule) -> bool:
        if self.ctx.is_abstraction_k(rule.lhs):
            return True
        return rule.lhs.is_uninterpreted and bool(rule.lhs.args) and self.ctx.is_abstraction_k(rule.rhs)


########################################
# Module-level operations
########################################

def process_equation(st: CompletionState, e: Equation, ctx: CanonContext,
                     config: Optional[_ProverConfigInternal] = None) -> CompletionState:
    """Run the strategy on one equation against an existing state."""
    engine = CompletionEngine(ctx, config)
    engine.state = st
    engine.process(PendingEquation(Equation(global_can(e.lhs, ctx), global_can(e.rhs, ctx))))
    return st


def complete(E0: Sequence[Equation], ctx: CanonContext,
             config: Optional[_ProverConfigInternal] = None) -> CompletionResult:
    engine = CompletionEngine(ctx, config).add_equations(E0)
    result = engine.run()
    if isinstance(result, FinalSystem):
        logger.debug(
            "completion done: %(rules)s rules, %(naming)s naming rules, %(inferences)s inferences",
            {"rules": len(result.rules), "naming": len(result.naming_rules), "inferences": result.inferences},
        )
    return result


def decide(E0: Sequence[Equation], goals: Union[Equation, Sequence[Equation]], ctx: CanonContext,
           config: Optional[_ProverConfigInternal] = None) -> Verdict:
    """Decide E0 ⊢ goals modulo AC and the theory of ``ctx``."""
    config = config if config is not None else DEFAULT_PROVER_CONFIG.copy()
    goals = [goals] if isinstance(goals, Equation) else list(goals)
    started = time.perf_counter()

    run = abstract_equations(E0, ctx, goals, name_constants=config.name_constants)
    result = complete(run.output, ctx, config)
    elapsed = int((time.perf_counter() - started) * 1000)

    if isinstance(result, Inconsistent):
        verdicts = [GoalVerdict(g, True) for g in goals]
        return Verdict(True, True, verdicts, result, run, elapsed)

    norm = Normalizer(result.rule_set, ctx, config.normal_form_budget)
    verdicts = []
    for original, goal in zip(goals, run.goals):
        lhs, rhs = norm(goal.lhs), norm(goal.rhs)
        verdicts.append(GoalVerdict(original, lhs is rhs, lhs, rhs))
    elapsed = int((time.perf_counter() - started) * 1000)
    return Verdict(all(v.valid for v in verdicts), False, verdicts, result, run, elapsed)
