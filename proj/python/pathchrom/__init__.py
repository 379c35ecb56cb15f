"""Exact path-chromatic toolkit.

Thin package wrapper around the compiled ``_core`` module: graph families and
products, exact (path-)chromatic numbers, decomposition validation, and the
claim-verification registry.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
