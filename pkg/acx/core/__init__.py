# acx/acx/core/__init__.py
"""Term algebra and orderings."""

from .terms import *
from .ordering import *
from . import terms as _terms, ordering as _ordering

__all__ = list(_terms.__all__) + list(_ordering.__all__)
