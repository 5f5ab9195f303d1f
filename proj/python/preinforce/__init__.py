"""Exact solvers for p-domination and p-reinforcement numbers of graphs."""

from ._preinforce import *  # noqa: F401,F403
from ._preinforce import __doc__  # noqa: F401
