"""Information-spreading simulator where each transmission is the equilibrium
of a two-player game between sender and receiver."""

from ._core import *  # noqa: F401,F403
