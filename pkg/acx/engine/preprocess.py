# acx/acx/engine/preprocess.py
"""
Abstraction of input equations.

Completion only orients equations of three shapes (the set 𝒜):

- both sides in 𝒯(Σ_X ∪ K);
- one side in 𝒯_∅ ∪ 𝒯_AC, the other in 𝒯(Σ_X ∪ K);
- both sides in 𝒯_AC with the same head.

Everything else is rewritten into that shape by naming innermost
non-conforming subterms with K constants (``π``) and emitting the defining
equations ``f(v) ≈ k``. Declared constants are named up front, either as
themselves (``name_constants``) or through explicit ``c ≈ k_c`` equations.
"""

from __future__ import annotations

__all__ = [
    "AbstractionRun",
    "classify",
    "is_abstracted",
    "abstract_equations",
    "unabstract",
]

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..core.ordering import TermClass, classify
from ..core.terms import Equation, Symbol, Term, apply_substitution, make
from ..errors import UnboundConstantError
from ..logger_utils import logger
from .canon import CanonContext, can_ac, global_can


@dataclass
class AbstractionRun:
    input: List[Equation]
    output: List[Equation] = field(default_factory=list)
    k_bindings: List[Tuple[Term, Term]] = field(default_factory=list)
    goals: List[Equation] = field(default_factory=list)
    definitions: List[Equation] = field(default_factory=list)


def is_abstracted(s: Term, t: Term) -> bool:
    cs, ct = classify(s), classify(t)
    if cs is TermClass.OTHER or ct is TermClass.OTHER:
        return False
    if cs is TermClass.PURE_XK or ct is TermClass.PURE_XK:
        return True
    return cs is TermClass.T_AC and ct is TermClass.T_AC and s.head == t.head


def _candidates(t: Term) -> Iterator[Term]:
    """𝒯_∅ / 𝒯_AC subterms innermost-leftmost, skipping non-maximal comb nodes."""
    stack: list = [(t, None, False)]
    while stack:
        node, parent_head, expanded = stack.pop()
        if expanded or not node.args:
            if node.is_ac and parent_head == node.head:
                continue
            if classify(node) in (TermClass.T_EMPTY, TermClass.T_AC):
                yield node
            continue
        stack.append((node, parent_head, True))
        for child in reversed(node.args):
            stack.append((child, node.head, False))


def _declared_constants(equations: Iterable[Equation]) -> List[Symbol]:
    found = {}
    stack = [side for eq in equations for side in (eq.lhs, eq.rhs)]
    while stack:
        node = stack.pop()
        if node.is_uninterpreted and not node.args:
            found[node.head] = None
        stack.extend(node.args)
    return sorted(found, key=lambda s: (s.rank, s.name))


def _symbol_names(equations: Iterable[Equation]) -> set:
    names = set()
    stack = [side for eq in equations for side in (eq.lhs, eq.rhs)]
    while stack:
        node = stack.pop()
        if isinstance(node.head, Symbol):
            names.add(node.head.name)
        stack.extend(node.args)
    return names


class _Abstractor:
    """Applies Abstract1 / Abstract2 to one equation at a time."""

    def __init__(self, ctx: CanonContext, run: AbstractionRun):
        self.ctx = ctx
        self.run = run

    def name(self, sub: Term) -> Term:
        k, created = self.ctx.abstraction_constant(sub)
        if created:
            definition = Equation(sub, k)
            self.run.definitions.append(definition)
            self.run.output.append(definition)
            logger.debug(f"abstracted {sub} as {k}")
        return k

    def abstract(self, s: Term, t: Term) -> Equation:
        ctx = self.ctx
        s, t = global_can(s, ctx), global_can(t, ctx)
        while not is_abstracted(s, t):
            target = next(_candidates(s), None) or next(_candidates(t), None)
            if target is None:
                # only variables can block abstraction; they never come from input
                raise ValueError(f"cannot abstract {s} ≈ {t}")
            k = self.name(target)
            s = global_can(apply_substitution(s, {target: k}), ctx)
            t = global_can(apply_substitution(t, {target: k}), ctx)
        return Equation(s, t)


def abstract_equations(E0: Sequence[Equation], ctx: CanonContext,
                       goals: Sequence[Equation] = (),
                       name_constants: bool = True) -> AbstractionRun:
    """Rewrite E0 (and the goal sides) into abstracted equations.

    Defining equations are placed in ``output`` in creation order, before the
    equation that needed them. Goal definitions land in ``output`` too, the
    abstracted goals themselves in ``goals``.
    """
    E0, goals = list(E0), list(goals)
    run = AbstractionRun(input=E0)
    everything = E0 + goals
    ctx.reserve_names(_symbol_names(everything))
    constants = _declared_constants(everything)
    abstractor = _Abstractor(ctx, run)

    if name_constants:
        for c in constants:
            ctx.name_constant(c)
    else:
        for c in constants:
            abstractor.name(make(c))

    def with_constants_named(t: Term) -> Term:
        if name_constants:
            return t
        return apply_substitution(t, {make(c): ctx.pi[make(c)] for c in constants})

    for eq in E0:
        out = abstractor.abstract(with_constants_named(eq.lhs), with_constants_named(eq.rhs))
        run.output.append(out)
    for goal in goals:
        run.goals.append(abstractor.abstract(with_constants_named(goal.lhs), with_constants_named(goal.rhs)))

    run.k_bindings = list(ctx.k_registry)
    logger.debug(
        f"abstraction: {len(E0)} equations in, {len(run.output)} out, "
        f"{len(run.definitions)} definitions"
    )
    return run


def unabstract(t: Term, run: AbstractionRun) -> Term:
    """Replace every K constant by the term it names, recursively."""
    bindings = dict(run.k_bindings)

    def walk(node: Term) -> Term:
        if node.is_kconst:
            if node not in bindings:
                raise UnboundConstantError(f"K constant {node} has no binding")
            return walk(bindings[node])
        if not node.args:
            return node
        return make(node.head, [walk(a) for a in node.args])

    return can_ac(walk(t))
