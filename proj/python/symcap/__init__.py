"""Toric-domain capacities, embedding verdicts and billiard actions."""

from symcap._core import *  # noqa: F401,F403
from symcap._core import __version__  # noqa: F401
