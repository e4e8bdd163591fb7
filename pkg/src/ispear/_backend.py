"""Kernel backend selection.

Hot loops ship in two flavours: a numba ``@njit`` version and a plain numpy
version. Set ``ISPEAR_DISABLE_NUMBA=1`` to force the numpy path everywhere
(handy for debugging and for platforms without numba). Individual kernels
also accept ``backend="numba" | "numpy"`` to override per call.
"""
import os

_FALSY = {"", "0", "false", "no", "off"}

try:
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency
    HAS_NUMBA = False
    _njit = None

NUMBA_DISABLED = os.environ.get("ISPEAR_DISABLE_NUMBA", "").strip().lower() not in _FALSY
DEFAULT_BACKEND = "numba" if HAS_NUMBA and not NUMBA_DISABLED else "numpy"
BACKENDS = ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def njit(func=None, **kwargs):
    """``numba.njit`` when available, otherwise a no-op decorator."""
    kwargs.setdefault("cache", True)

    def wrap(f):
        if not HAS_NUMBA:
            return f
        return _njit(**kwargs)(f)

    if func is not None:
        return wrap(func)
    return wrap


def resolve(backend):
    if backend is None:
        return DEFAULT_BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}; expected 'numba' or 'numpy'")
    if backend == "numba" and not HAS_NUMBA:
        return "numpy"
    return backend
