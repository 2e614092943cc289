"""Spiking ON-OFF Ising machine with Fowler-Nordheim annealing."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
