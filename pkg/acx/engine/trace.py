# acx/acx/engine/trace.py

from __future__ import annotations

__all__ = ["Inference", "TraceRow", "CompletionTrace", "write_lines"]

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.terms import Equation, Rule, Term
from ..logger_utils import logger


class Inference(Enum):
    ORIENT = "Ori"
    SIMPLIFY = "Sim"
    TRIVIAL = "Tri"
    BOTTOM = "Bot"
    COMPOSE = "Com"
    COLLAPSE = "Col"
    DEDUCE = "Ded"


@dataclass
class TraceRow:
    """One numbered line of the completion log."""
    step: int
    inference: Inference
    item: Union[Rule, Equation]
    justification: str
    refs: Tuple[int, ...] = ()
    persistent: bool = False

    @property
    def is_rule(self) -> bool:
        return isinstance(self.item, Rule)


@dataclass
class CompletionTrace:
    """Ordered log of inferences; step numbers start at 1."""
    rows: List[TraceRow] = field(default_factory=list)
    enabled: bool = True
    _counter: int = 0

    def add(self, inference: Inference, item: Union[Rule, Equation], justification: str,
            refs: Tuple[int, ...] = ()) -> int:
        self._counter += 1
        if self.enabled:
            self.rows.append(TraceRow(self._counter, inference, item, justification, tuple(refs)))
        return self._counter

    def mark_persistent(self, steps) -> None:
        keep = set(steps)
        for row in self.rows:
            row.persistent = row.step in keep and row.is_rule

    def __iter__(self) -> Iterator[TraceRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def inference_names(self) -> List[str]:
        return [row.inference.value for row in self.rows]

    def render(self, display: Optional[Callable[[Term], Term]] = None) -> str:
        """``| step | item | justification |`` table; persistent rules are bold."""
        lines = ["| step | item | justification |", "|---|---|---|"]
        for row in self.rows:
            item = _render_item(row.item, display)
            if row.persistent:
                item = f"**{item}**"
            lines.append(f"| {row.step} | {item} | {row.justification} |")
        return "\n".join(lines)

    def write(self, path, display: Optional[Callable[[Term], Term]] = None) -> bool:
        """Write the rendered table to ``path``; failures are logged, not raised."""
        lines = self.render(display).split("\n") if self.rows else []
        return write_lines(path, lines, "trace")


def write_lines(path, lines: Sequence[str], what: str) -> bool:
    """Write newline-terminated ``lines`` to ``path``. Returns whether a file was written.

    Nothing is written for an empty ``lines``; I/O failures are logged, not raised.
    """
    if not lines:
        logger.debug("No %(what)s lines to write, skipping file creation.", {"what": what})
        return False
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as e:
        logger.error(
            "Failed to write %(what)s to %(path)s: %(error)s",
            {"what": what, "path": f"'{path}'", "error": str(e)},
        )
        return False
    logger.info("%(what)s file has been written as %(path)s", {"what": what.capitalize(), "path": f"'{path}'"})
    return True


def _render_item(item: Union[Rule, Equation], display: Optional[Callable[[Term], Term]]) -> str:
    if display is None:
        return str(item)
    if isinstance(item, Rule):
        return str(Rule(display(item.lhs), display(item.rhs)))
    return str(Equation(display(item.lhs), display(item.rhs)))
