"""Potential flow past closely spaced discs (C++ core)."""

from ._hybridisc import *  # noqa: F401,F403
from ._hybridisc import __doc__  # noqa: F401

__version__ = "0.1.0"
