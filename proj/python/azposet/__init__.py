"""Ranked posets, structural checks and exact identity sums."""

from ._core import *  # noqa: F401,F403
from ._core import AzposetError, RankedPoset, generate

__all__ = [name for name in dir() if not name.startswith("_")]
