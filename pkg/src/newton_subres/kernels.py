"""Kernel backend selection.

The compiled ``_core`` extension is used when importable; setting
``NEWTON_SUBRES_PURE=1`` forces the pure-Python implementation.
"""

import os

if os.environ.get("NEWTON_SUBRES_PURE"):
    from ._core_py import bareiss_det, matmul

    BACKEND = "python"
else:
    try:
        from ._core import bareiss_det, matmul

        BACKEND = "cython"
    except ImportError:
        from ._core_py import bareiss_det, matmul

        BACKEND = "python"

__all__ = ["BACKEND", "bareiss_det", "matmul"]
