# acx/acx/problems/__init__.py
"""Problems shipped with the package, used by ``acx selftest`` and the tests."""

from __future__ import annotations

__all__ = ["PROBLEM_NAMES", "problem_path", "load_problem_text"]

from importlib import resources
from pathlib import Path
from typing import Tuple

from ..errors import ProblemError

PROBLEM_NAMES: Tuple[str, ...] = ("fig3", "fig4", "inconsistent")


def problem_path(name: str) -> Path:
    if name not in PROBLEM_NAMES:
        raise ProblemError(f"no bundled problem named {name!r}; known: {', '.join(PROBLEM_NAMES)}")
    return Path(str(resources.files(__name__).joinpath(f"{name}.acx")))


def load_problem_text(name: str) -> str:
    return problem_path(name).read_text(encoding="utf-8")
