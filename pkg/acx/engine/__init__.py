# acx/acx/engine/__init__.py
"""Canonizers, rewriting, abstraction and the completion engine."""

from .canon import *
from .rewrite import *
from .trace import *
from .preprocess import *
from .completion import *
from . import canon as _canon, completion as _completion, preprocess as _preprocess
from . import rewrite as _rewrite, trace as _trace

__all__ = (
    list(_canon.__all__)
    + list(_rewrite.__all__)
    + list(_trace.__all__)
    + [n for n in _preprocess.__all__ if n != "classify"]
    + list(_completion.__all__)
)
