# acx/acx/frontend/selftest.py
"""Built-in replays run by ``acx selftest``.

Each check parses a problem bundled in :mod:`acx.problems`, runs the prover
and compares the verdict and the core rule count with the known answer. The
oracle checks re-derive the same goals by bounded saturation, so a failure
points at either side.
"""

from __future__ import annotations

__all__ = ["CheckResult", "run_selftest"]

from dataclasses import dataclass
from typing import List, Optional

from ..config import _ProverConfigInternal
from ..core.terms import Equation
from ..problems import load_problem_text
from .oracle import OracleResult, oracle_derivable
from .parser import parse_problem, parse_term
from .prover import prove_problem


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _replay(name: str, problem_name: str, label: str, rules: Optional[int],
            config: Optional[_ProverConfigInternal]) -> CheckResult:
    report = prove_problem(parse_problem(load_problem_text(problem_name)), config)
    got = report.verdict.label
    ok = got == label and (rules is None or report.rule_count == rules)
    detail = f"{got}, {report.rule_count} rules, {report.verdict.elapsed_ms} ms"
    return CheckResult(name, ok, detail)


def _oracle(name: str, problem_name: str, goal: Optional[str], derivable: bool,
            config: Optional[_ProverConfigInternal]) -> CheckResult:
    problem = parse_problem(load_problem_text(problem_name))
    goals = problem.goals
    if goal is not None:
        lhs, rhs = goal.split("=", 1)
        goals = [Equation(parse_term(lhs, problem), parse_term(rhs, problem))]
    bound = config.oracle_bound if config is not None else 10
    max_terms = config.oracle_max_terms if config is not None else 4000
    got = oracle_derivable(problem.hypotheses, goals, bound=bound, theory=problem.theory, max_terms=max_terms)
    return CheckResult(name, (got is OracleResult.DERIVABLE) == derivable, got.value)


def run_selftest(config: Optional[_ProverConfigInternal] = None) -> List[CheckResult]:
    return [
        _replay("fig3 replay", "fig3", "valid", 5, config),
        _replay("fig4 replay", "fig4", "valid", 7, config),
        _replay("inconsistent hypotheses", "inconsistent", "valid (inconsistent hypotheses)", None, config),
        _oracle("fig3 oracle", "fig3", None, True, config),
        _oracle("fig3 oracle a1 = a2", "fig3", "a1 = a2", False, config),
        _oracle("fig4 oracle", "fig4", None, True, config),
    ]
