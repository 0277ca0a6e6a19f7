"""Finite digroups and left skew braces as explicit operation tables.

The native module carries the whole API: group/digroup construction and
validation, lambda maps, skew-brace verdicts, inner and outer semidirect
products, ideal algebra, Yang-Baxter solutions, and the DGT/ACTION/solution
text formats.
"""

from skewbrace import _core
from skewbrace._core import *  # noqa: F401,F403

__all__ = [name for name in dir(_core) if not name.startswith("_")]
