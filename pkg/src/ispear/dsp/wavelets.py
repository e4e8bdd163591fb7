"""Daubechies db1..db4 filters and the single-level periodic DWT."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from ispear.dsp._kernels import dwt_periodic, idwt_periodic
from ispear.errors import EmptySignalError, UnsupportedOrderError

MAX_ORDER = 4


@dataclass(frozen=True, eq=False)
class FilterPair:
    order: int
    lowpass: np.ndarray
    highpass: np.ndarray


def _minimum_phase_lowpass(order: int) -> np.ndarray:
    """Spectral factorization of the Daubechies product filter.

    The squared response factors as ((1 + cos w) / 2)^N * P(sin^2(w/2)) with
    P(y) = sum_k C(N-1+k, k) y^k. Each root y_k of P yields a reciprocal
    pair of z-roots of z^2 - (2 - 4 y_k) z + 1; the minimum-phase filter
    keeps the one inside the unit circle.
    """
    n = order
    p = [comb(n - 1 + k, k) for k in range(n)]
    y_roots = np.roots(p[::-1]) if n > 1 else np.array([])
    z_roots = []
    for y in y_roots:
        pair = np.roots([1.0, -(2.0 - 4.0 * y), 1.0])
        z_roots.append(pair[np.argmin(np.abs(pair))])
    h = np.array([1.0])
    for _ in range(n):
        h = np.convolve(h, [1.0, 1.0])
    if z_roots:
        h = np.convolve(h, np.real(np.poly(z_roots)))
    h = h / h.sum() * np.sqrt(2.0)
    # np.poly yields descending powers; minimum phase front-loads the energy
    if abs(h[0]) < abs(h[-1]):
        h = h[::-1]
    return h


@lru_cache(maxsize=None)
def _filters(order):
    lo = _minimum_phase_lowpass(order)
    length = lo.size
    hi = np.array([(-1) ** k * lo[length - 1 - k] for k in range(length)])
    lo.setflags(write=False)
    hi.setflags(write=False)
    return FilterPair(order, lo, hi)


def daubechies_filters(order: int) -> FilterPair:
    """Minimum-phase Daubechies lowpass/highpass pair with 2*order taps."""
    if isinstance(order, bool) or int(order) != order or not 1 <= order <= MAX_ORDER:
        raise UnsupportedOrderError(f"Daubechies order must be 1..{MAX_ORDER}, got {order!r}")
    return _filters(int(order))


def pad_even(signal) -> tuple:
    """Zero-pad odd-length input by one sample. Returns (signal, padded)."""
    x = np.asarray(signal, dtype=np.float64).ravel()
    if x.size % 2:
        return np.concatenate([x, [0.0]]), True
    return x, False


def dwt_level1(signal, order: int, backend=None):
    """One-level periodic DWT.

    approx[n] = sum_k lowpass[k] * x[(2n + k) mod N], likewise detail with
    the highpass filter; odd-length input is zero-padded by one sample.
    """
    fp = daubechies_filters(order)
    x, _ = pad_even(signal)
    if x.size == 0:
        raise EmptySignalError("cannot transform an empty signal")
    return dwt_periodic(x, fp.lowpass, fp.highpass, backend=backend)


def idwt_level1(approx, detail, order: int, backend=None):
    """Inverse of :func:`dwt_level1` (for even-length input)."""
    fp = daubechies_filters(order)
    approx = np.asarray(approx, dtype=np.float64)
    detail = np.asarray(detail, dtype=np.float64)
    if approx.shape != detail.shape or approx.ndim != 1:
        raise ValueError("approx and detail must be 1-D arrays of equal length")
    if approx.size == 0:
        raise EmptySignalError("cannot invert an empty coefficient set")
    return idwt_periodic(approx, detail, fp.lowpass, fp.highpass, backend=backend)
