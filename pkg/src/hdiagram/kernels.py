"""Kernel selection: the compiled core when importable, else the pure-Python one.

Set ``HDIAGRAM_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("HDIAGRAM_PURE_PYTHON"):
    from . import _kernels_py as impl
else:
    try:
        from . import _kernels as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as impl

BACKEND = "python" if impl.__name__.endswith("_kernels_py") else "cython"

compose = impl.compose
push_down = impl.push_down
push_up = impl.push_up
straight_step = impl.straight_step
mismatches = impl.mismatches
missing_target = impl.missing_target

__all__ = [
    "BACKEND",
    "compose",
    "push_down",
    "push_up",
    "straight_step",
    "mismatches",
    "missing_target",
]
