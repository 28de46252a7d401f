"""Backend selection for the hot kernels.

Set ``WEIGHMAT_DISABLE_NUMBA=1`` to force the pure-numpy path even when numba
is importable. The flag is read once at import time.
"""
import os

_flag = os.environ.get("WEIGHMAT_DISABLE_NUMBA", "").strip().lower()
DISABLED = _flag not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError
    import numba

    # the bundled TBB is too old; skip it instead of warning on every import
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
    NUMBA_AVAILABLE = True
except ImportError:
    numba = None
    NUMBA_AVAILABLE = False


def default_backend():
    return "numba" if NUMBA_AVAILABLE else "numpy"


def check_backend(backend):
    if backend is None:
        return default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba backend requested but numba is disabled or missing")
    return backend
