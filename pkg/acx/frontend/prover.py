# acx/acx/frontend/prover.py
"""Prover driver: one problem, one context, one completion run, one report."""

from __future__ import annotations

__all__ = ["ProverReport", "prove_problem", "render_report"]

from dataclasses import dataclass
from typing import List, Optional

from ..config import ProverConfigManager, _ProverConfigInternal
from ..core.terms import Rule
from ..engine.canon import CanonContext
from ..engine.completion import FinalSystem, Verdict, decide
from ..engine.preprocess import unabstract
from ..logger_utils import logger
from ..theories import get_theory
from .problem import Problem


@dataclass
class ProverReport:
    problem: Problem
    verdict: Verdict
    ctx: CanonContext
    config: _ProverConfigInternal

    @property
    def final_system(self) -> Optional[FinalSystem]:
        result = self.verdict.result
        return result if isinstance(result, FinalSystem) else None

    @property
    def rule_count(self) -> int:
        fs = self.final_system
        return len(fs.rules) if fs is not None else 0

    @property
    def naming_rule_count(self) -> int:
        fs = self.final_system
        return len(fs.naming_rules) if fs is not None else 0

    @property
    def inferences(self) -> int:
        return self.verdict.result.inferences

    def display_rules(self, include_naming: bool = False) -> List[Rule]:
        """Final rules with every K constant replaced by the term it names."""
        fs = self.final_system
        if fs is None:
            return []
        rules = fs.rules + (fs.naming_rules if include_naming else [])
        run = self.verdict.run
        return [Rule(unabstract(r.lhs, run), unabstract(r.rhs, run)) for r in rules]


def prove_problem(problem: Problem, config: Optional[_ProverConfigInternal] = None,
                  theory: Optional[str] = None) -> ProverReport:
    """Decide every goal of ``problem``; ``theory`` overrides the problem's own."""
    manager = ProverConfigManager(config.copy() if config is not None else None)
    manager.apply_config({"theory": theory or problem.theory})
    manager.lock()
    cfg = manager.config

    ctx = CanonContext(get_theory(cfg.theory), debug_checks=cfg.debug_checks)
    verdict = decide(problem.hypotheses, problem.goals, ctx, cfg)
    logger.info(
        f"{verdict.label}: {len(problem.hypotheses)} hypotheses, {len(problem.goals)} goals, "
        f"{verdict.elapsed_ms} ms"
    )
    return ProverReport(problem, verdict, ctx, cfg)


def render_report(report: ProverReport, trace: bool = False, show_rules: bool = False,
                  per_goal: bool = False) -> str:
    verdict = report.verdict
    lines = [
        f"result: {verdict.label}",
        f"rules: {report.rule_count}",
        f"naming_rules: {report.naming_rule_count}",
        f"inferences: {report.inferences}",
        f"time_ms: {verdict.elapsed_ms}",
    ]
    if per_goal:
        for i, g in enumerate(verdict.goals, start=1):
            lines.append(f"goal {i}: {'valid' if g.valid else 'invalid'}  {g.goal}")
    if show_rules:
        lines.append("")
        lines.extend(str(r) for r in report.display_rules())
    if trace:
        lines.append("")
        lines.append(verdict.result.trace.render())
    return "\n".join(lines)
