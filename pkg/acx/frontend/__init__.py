# acx/acx/frontend/__init__.py
"""Problem files, the prover driver, benchmark generators and the oracle."""

from .problem import *
from .parser import *
from .prover import *
from .bench import *
from .oracle import *
from .selftest import *
from . import bench as _bench, oracle as _oracle, parser as _parser
from . import problem as _problem, prover as _prover, selftest as _selftest

__all__ = (
    list(_problem.__all__)
    + list(_parser.__all__)
    + list(_prover.__all__)
    + list(_bench.__all__)
    + list(_oracle.__all__)
    + list(_selftest.__all__)
)
