"""Combinatorial engine for systolic complexes.

Thin wrapper over the C++ core: simplicial operators, largeness and
systolicity checks, combinatorial geodesics and convexity, minimal disc
fillings, and Helly witness search.
"""

from ._systolic import *  # noqa: F401,F403
from ._systolic import __doc__ as _core_doc  # noqa: F401
