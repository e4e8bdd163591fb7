"""Time the numba and numpy variants of each hot kernel.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Every kernel runs once per backend before timing so JIT compilation is
excluded; the table reports the best of N repeats.
"""
import argparse
import timeit

import numpy as np

from ispear._backend import BACKENDS
from ispear.dsp._kernels import dwt_periodic, frame_energy, idwt_periodic
from ispear.dsp.wavelets import daubechies_filters
from ispear.ml._smo import smo_solve


def cases(rng):
    clip = rng.normal(size=16_000)  # one second at 16 kHz
    f = daubechies_filters(4)
    a, d = dwt_periodic(clip, f.lowpass, f.highpass, backend="numpy")
    X = rng.normal(size=(1000, 1))
    y = np.where(X[:, 0] + rng.normal(0, 0.8, 1000) > 0, 1.0, -1.0)
    K = (X @ X.T + 1.0) ** 3
    return {
        "frame_energy (1 s clip)": lambda b: frame_energy(clip, 400, 160, backend=b),
        "dwt db4 (1 s clip)": lambda b: dwt_periodic(clip, f.lowpass, f.highpass, backend=b),
        "idwt db4 (1 s clip)": lambda b: idwt_periodic(a, d, f.lowpass, f.highpass, backend=b),
        "smo (n=1000, C=1)": lambda b: smo_solve(K, y, 1.0, backend=b),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repeats per kernel")
    args = parser.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<26}" + "".join(f"{b:>14}" for b in BACKENDS) + f"{'speedup':>10}")
    for name, run in cases(rng).items():
        best = {}
        for backend in BACKENDS:
            run(backend)  # warm-up / compile
            number = 1 if name.startswith("smo") else 20
            t = min(timeit.repeat(lambda: run(backend), number=number, repeat=args.repeat)) / number
            best[backend] = t
        speedup = best["numpy"] / best["numba"] if "numba" in best else float("nan")
        print(f"{name:<26}" + "".join(f"{best[b] * 1e3:>11.3f} ms" for b in BACKENDS) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
