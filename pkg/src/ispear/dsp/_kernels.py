"""Inner loops of the DSP path, each with an njit and a numpy implementation."""
import numpy as np

from ispear._backend import njit, resolve


@njit
def _frame_energy_nb(x, frame_len, hop):
    n_frames = 1 + (x.size - frame_len) // hop
    out = np.empty(n_frames)
    for f in range(n_frames):
        s = 0.0
        base = f * hop
        for i in range(frame_len):
            v = x[base + i]
            s += v * v
        out[f] = s
    return out


def _frame_energy_np(x, frame_len, hop):
    n_frames = 1 + (x.size - frame_len) // hop
    frames = np.lib.stride_tricks.sliding_window_view(x, frame_len)[::hop][:n_frames]
    return np.einsum("ij,ij->i", frames, frames)


def frame_energy(x, frame_len, hop, backend=None):
    """Sum of squares over frames ``x[f*hop : f*hop + frame_len]`` that fit in x."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if resolve(backend) == "numba":
        return _frame_energy_nb(x, int(frame_len), int(hop))
    return _frame_energy_np(x, int(frame_len), int(hop))


@njit
def _dwt_nb(x, lo, hi):
    n = x.size
    half = n // 2
    approx = np.zeros(half)
    detail = np.zeros(half)
    for m in range(half):
        a = 0.0
        d = 0.0
        for k in range(lo.size):
            v = x[(2 * m + k) % n]
            a += lo[k] * v
            d += hi[k] * v
        approx[m] = a
        detail[m] = d
    return approx, detail


def _dwt_np(x, lo, hi):
    n = x.size
    idx = (2 * np.arange(n // 2)[:, None] + np.arange(lo.size)[None, :]) % n
    taps = x[idx]
    return taps @ lo, taps @ hi


def dwt_periodic(x, lo, hi, backend=None):
    x = np.ascontiguousarray(x, dtype=np.float64)
    lo = np.ascontiguousarray(lo, dtype=np.float64)
    hi = np.ascontiguousarray(hi, dtype=np.float64)
    if resolve(backend) == "numba":
        return _dwt_nb(x, lo, hi)
    return _dwt_np(x, lo, hi)


@njit
def _idwt_nb(approx, detail, lo, hi):
    half = approx.size
    n = 2 * half
    x = np.zeros(n)
    for m in range(half):
        for k in range(lo.size):
            x[(2 * m + k) % n] += lo[k] * approx[m] + hi[k] * detail[m]
    return x


def _idwt_np(approx, detail, lo, hi):
    half = approx.size
    n = 2 * half
    idx = (2 * np.arange(half)[:, None] + np.arange(lo.size)[None, :]) % n
    contrib = approx[:, None] * lo[None, :] + detail[:, None] * hi[None, :]
    x = np.zeros(n)
    np.add.at(x, idx.ravel(), contrib.ravel())
    return x


def idwt_periodic(approx, detail, lo, hi, backend=None):
    approx = np.ascontiguousarray(approx, dtype=np.float64)
    detail = np.ascontiguousarray(detail, dtype=np.float64)
    lo = np.ascontiguousarray(lo, dtype=np.float64)
    hi = np.ascontiguousarray(hi, dtype=np.float64)
    if resolve(backend) == "numba":
        return _idwt_nb(approx, detail, lo, hi)
    return _idwt_np(approx, detail, lo, hi)
