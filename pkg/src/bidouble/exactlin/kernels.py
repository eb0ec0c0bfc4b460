"""Kernel selection: compiled int64 path when available, Python ints otherwise.

Set ``BIDOUBLE_PURE_PYTHON=1`` to force the pure-Python kernel.
"""

import os

import numpy as np

from . import _pykernel

try:
    if os.environ.get("BIDOUBLE_PURE_PYTHON"):
        raise ImportError("pure Python kernel requested")
    from ._ckernel import batched_matmul_i64 as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# entries beyond this bound skip the int64 path outright
_INT64_SAFE = 1 << 62


def _as_int64(a: np.ndarray):
    if a.size == 0:
        return np.zeros(a.shape, dtype=np.int64)
    lo = min(a.flat)
    hi = max(a.flat)
    if hi >= _INT64_SAFE or lo <= -_INT64_SAFE:
        return None
    return np.ascontiguousarray(a.astype(np.int64))


def python_batched_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _pykernel.batched_matmul(a, b)


def batched_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact ``a[n] @ b[n]`` for object arrays of Python ints.

    Uses the compiled kernel when every entry fits in int64 and falls back to
    Python integers on overflow, so results never depend on the backend.
    """
    if _compiled is not None:
        a64 = _as_int64(a)
        if a64 is not None:
            b64 = _as_int64(b)
            if b64 is not None:
                try:
                    return _compiled(a64, b64).astype(object)
                except OverflowError:
                    pass
    return _pykernel.batched_matmul(a, b)
