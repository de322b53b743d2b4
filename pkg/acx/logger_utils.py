# acx/acx/logger_utils.py
"""Package logger.

Built the way manim builds its own ``logger``: a named stdlib logger with a
single :class:`rich.logging.RichHandler`, so every module can do
``from ..logger_utils import logger`` and log with %-style dict arguments.
"""

from __future__ import annotations

__all__ = ["logger", "console", "set_verbosity"]

import logging

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

_THEME = Theme(
    {
        "logging.level.debug": "dim",
        "logging.level.info": "green",
        "logging.level.warning": "yellow",
        "logging.level.error": "bold red",
    }
)

console = Console(theme=_THEME, stderr=True)


def _make_logger() -> logging.Logger:
    log = logging.getLogger("acx")
    if not any(isinstance(h, RichHandler) for h in log.handlers):
        handler = RichHandler(
            console=console,
            show_time=False,
            show_path=False,
            keywords=["Ori", "Sim", "Tri", "Bot", "Com", "Col", "Ded"],
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        log.addHandler(handler)
    log.setLevel(logging.INFO)
    log.propagate = True
    return log


logger = _make_logger()


def set_verbosity(level: str) -> None:
    """Set the package log level by name ("DEBUG", "INFO", "WARNING", ...)."""
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
