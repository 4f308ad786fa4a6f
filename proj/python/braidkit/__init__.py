"""Braid group engine: Garside normal forms, Artin action, combing,
Dehornoy ordering and conjugacy by cyclic sliding."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
