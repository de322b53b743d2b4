# acx/acx/frontend/bench.py
"""
Benchmark families C1 and C2.

C1 (theory empty), for p = 1..n::

    {e} ∪ a_1^p ∪ ... ∪ a_d^p ≈ b^p

C2 (theory lia) replaces the singleton {e} by {t_p - p} and adds the chain
``t_p + 1 ≈ t_{p+1}`` for p = 1..n-1, which makes every singleton equal.

Both share the conclusion: for every p < q,
``a_d^p ∪ (... ∪ (a_1^p ∪ b^q)) ≈ a_d^q ∪ (... ∪ (a_1^q ∪ b^p))``. Each
conjunct is a separate goal; the problem is valid when all of them are.

The mutated variants are invalid: C1 replaces ``b^n`` in the goals by a
fresh constant, C2 breaks the chain with ``t_1 + 2 ≈ t_2``.

Grid runs put one (n, d) cell per task on a :class:`multiprocessing.Pool`;
each worker builds its own context and engine.
"""

from __future__ import annotations

__all__ = [
    "BenchParams",
    "BenchResult",
    "GRID_SIZES",
    "gen_c1",
    "gen_c2",
    "generate",
    "run_bench",
    "run_grid",
    "render_grid",
]

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from ..config import _ProverConfigInternal
from ..core.terms import Equation, Symbol, SymbolKind, Term, make, num
from ..logger_utils import logger
from ..theories.lia import MINUS, PLUS
from .problem import Problem

GRID_SIZES = (3, 6, 12)


@dataclass(frozen=True)
class BenchParams:
    """n hypothesis equations over AC terms of depth d."""
    n: int
    d: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")


class _Signature:
    """Declares symbols in order, so ranks follow declaration order."""

    def __init__(self):
        self.symbols: Dict[str, Symbol] = {}

    def declare(self, name: str, kind: SymbolKind = SymbolKind.UNINTERPRETED, arity: int = 0) -> Symbol:
        sym = Symbol(name, kind, arity, rank=len(self.symbols))
        self.symbols[name] = sym
        return sym

    def const(self, name: str) -> Term:
        return make(self.symbols[name])


def _union_chain(u: Symbol, items: Sequence[Term]) -> Term:
    """items[0] ∪ (items[1] ∪ (... ∪ items[-1]))"""
    result = items[-1]
    for t in reversed(items[:-1]):
        result = make(u, (t, result))
    return result


def _declare_family(sig: _Signature, p: BenchParams, with_t: bool) -> None:
    sig.declare("u", SymbolKind.AC, 2)
    sig.declare("sing", arity=1)
    if not with_t:
        sig.declare("e")
    for q in range(1, p.n + 1):
        if with_t:
            sig.declare(f"t{q}")
        for i in range(1, p.d + 1):
            sig.declare(f"a{i}_{q}")
        sig.declare(f"b{q}")


def _hypothesis(sig: _Signature, p: BenchParams, q: int, singleton: Term) -> Equation:
    u = sig.symbols["u"]
    items = [make(sig.symbols["sing"], (singleton,))]
    items += [sig.const(f"a{i}_{q}") for i in range(1, p.d + 1)]
    return Equation(_union_chain(u, items), sig.const(f"b{q}"))


def _goals(sig: _Signature, p: BenchParams, last_b: Optional[Term] = None) -> List[Equation]:
    u = sig.symbols["u"]

    def b(q: int) -> Term:
        if q == p.n and last_b is not None:
            return last_b
        return sig.const(f"b{q}")

    goals = []
    for q1 in range(1, p.n):
        for q2 in range(q1 + 1, p.n + 1):
            lhs = [sig.const(f"a{i}_{q1}") for i in range(p.d, 0, -1)] + [b(q2)]
            rhs = [sig.const(f"a{i}_{q2}") for i in range(p.d, 0, -1)] + [b(q1)]
            goals.append(Equation(_union_chain(u, lhs), _union_chain(u, rhs)))
    return goals


def gen_c1(p: BenchParams, mutate: bool = False) -> Problem:
    sig = _Signature()
    _declare_family(sig, p, with_t=False)
    fresh = sig.declare("c") if mutate else None
    e = sig.const("e")
    hypotheses = [_hypothesis(sig, p, q, e) for q in range(1, p.n + 1)]
    goals = _goals(sig, p, make(fresh) if fresh is not None else None)
    return Problem("empty", sig.symbols, hypotheses, goals)


def gen_c2(p: BenchParams, mutate: bool = False) -> Problem:
    sig = _Signature()
    _declare_family(sig, p, with_t=True)
    hypotheses = []
    for q in range(1, p.n + 1):
        singleton = make(MINUS, (sig.const(f"t{q}"), num(q)))
        hypotheses.append(_hypothesis(sig, p, q, singleton))
    for q in range(1, p.n):
        step = 2 if mutate and q == 1 else 1
        hypotheses.append(Equation(make(PLUS, (sig.const(f"t{q}"), num(step))), sig.const(f"t{q + 1}")))
    return Problem("lia", sig.symbols, hypotheses, _goals(sig, p))


_GENERATORS: Dict[str, Callable[..., Problem]] = {"c1": gen_c1, "c2": gen_c2}


def generate(family: str, p: BenchParams, mutate: bool = False) -> Problem:
    try:
        gen = _GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown benchmark family {family!r}; expected c1 or c2") from None
    return gen(p, mutate=mutate)


########################################
# Runs
########################################

@dataclass
class BenchResult:
    family: str
    n: int
    d: int
    valid: bool
    rules: int
    inferences: int
    time_ms: int
    mutated: bool = False


def run_bench(family: str, p: BenchParams, config: Optional[_ProverConfigInternal] = None,
              mutate: bool = False) -> BenchResult:
    from .prover import prove_problem

    report = prove_problem(generate(family, p, mutate=mutate), config)
    verdict = report.verdict
    return BenchResult(
        family, p.n, p.d, verdict.valid, report.rule_count, report.inferences, verdict.elapsed_ms, mutate,
    )


def _run_cell(task) -> BenchResult:
    family, n, d, config, mutate = task
    return run_bench(family, BenchParams(n, d), config, mutate)


def run_grid(family: str, config: Optional[_ProverConfigInternal] = None, sizes: Sequence[int] = GRID_SIZES,
             mutate: bool = False, workers: int = 1) -> List[BenchResult]:
    """Every (n, d) in sizes × sizes, in row order n-major."""
    tasks = [(family, n, d, config, mutate) for n in sizes for d in sizes]
    if workers <= 1:
        results = [_run_cell(t) for t in tasks]
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            results = pool.map(_run_cell, tasks)
    for r in results:
        logger.info(f"{r.family} n={r.n} d={r.d}: {'valid' if r.valid else 'invalid'} in {r.time_ms} ms")
    return results


def render_grid(results: Sequence[BenchResult]) -> str:
    """``| n, d | time (s) | result |`` table, one row per cell."""
    lines = ["| n, d | time (s) | result |", "|---|---|---|"]
    for r in results:
        lines.append(f"| {r.n}, {r.d} | {r.time_ms / 1000:.2f} | {'valid' if r.valid else 'invalid'} |")
    return "\n".join(lines)
