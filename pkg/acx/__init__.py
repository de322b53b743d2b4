"""acx: Ground AC Completion Modulo Shostak Theories

Decides ground equational problems over associative-commutative symbols,
free function symbols and (optionally) linear arithmetic by completing the
hypotheses into a convergent rewrite system.

IMPORT STRATEGY:
----------------
The public API of every sub-package is re-exported here, so callers only
need ``from acx import *`` (or named imports) to build terms, run
completion and parse problem files.

STRUCTURE:
----------
- core/: interned terms, positions, AC aliens and combs, term orderings
- theories/: Shostak theories (empty, linear arithmetic)
- engine/: canonizers, rewriting, abstraction, the completion engine
- frontend/: problem files, benchmark generators, the saturation oracle
- animation/: optional manim rendering of completion traces

USAGE:
------
    from acx import parse_problem, prove_problem
    from acx.problems import load_problem_text

    problem = parse_problem(load_problem_text("fig3"))
    report = prove_problem(problem)
    print(report.verdict.label)
"""

# acx/__init__.py
from .errors import *
from .config import *
from .core import *
from .theories import *
from .engine import *
from .frontend import *
