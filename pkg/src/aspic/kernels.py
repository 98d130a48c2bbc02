"""Select the labelling kernel: compiled if importable, else pure Python.

Set ``ASPIC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _labelling_py

pure = _labelling_py

if os.environ.get("ASPIC_PURE_PYTHON") == "1":
    compiled = None
else:
    try:
        from . import _labelling as compiled
    except ImportError:  # extension not built
        compiled = None

active = compiled or pure
BACKEND = "compiled" if compiled is not None else "python"


def get(name: str | None = None):
    """Kernel module by name: ``compiled``, ``python`` or ``None`` for the active one."""
    if name is None:
        return active
    if name == "python":
        return pure
    if name == "compiled":
        if compiled is None:
            raise RuntimeError("compiled labelling kernel is not available")
        return compiled
    raise ValueError(f"unknown kernel {name!r}")
