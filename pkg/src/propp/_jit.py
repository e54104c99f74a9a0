"""Switch between numba-compiled kernels and their plain Python/numpy form.

Set ``PROPP_DISABLE_JIT=1`` to run every kernel through the interpreter.
The compiled dispatcher keeps the original function on ``.py_func`` so both
paths stay reachable from one process (the benchmark and tests use that).
"""
from __future__ import annotations

import os

_DISABLED = os.environ.get("PROPP_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_ENABLED = numba is not None and not _DISABLED


def njit(func):
    if not JIT_ENABLED:
        func.py_func = func
        return func
    return numba.njit(cache=True, nogil=True)(func)
