"""Kernel backend selection.

Imports the compiled kernels when available, otherwise the pure-Python
fallback.  Set ``ASPEC_PURE_PYTHON=1`` to force the fallback (used by
the benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("ASPEC_PURE_PYTHON"):
    from aspec import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from aspec import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from aspec import _kernels_py as kernels

        BACKEND = "python"


def backend_name() -> str:
    return BACKEND
