"""Entanglement dynamics of three cavities dissipating into independent reservoirs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
