"""Monochromatic connection colorings, bounds on mc(G), and G(n,p) threshold
experiments. Thin wrapper over the C++ core in ``mclab._core``."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
