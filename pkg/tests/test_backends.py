import os
import subprocess
import sys

import numpy as np
import pytest

from ispear import _backend
from ispear.dsp._kernels import dwt_periodic, frame_energy, idwt_periodic
from ispear.dsp.wavelets import daubechies_filters
from ispear.ml._smo import smo_solve

needs_numba = pytest.mark.skipif(not _backend.HAS_NUMBA, reason="numba not installed")


@needs_numba
def test_frame_energy_backends_agree(rng):
    for n in (400, 401, 1000, 16000):
        x = rng.normal(size=n)
        a = frame_energy(x, 400, 160, backend="numba")
        b = frame_energy(x, 400, 160, backend="numpy")
        np.testing.assert_allclose(a, b, rtol=1e-12)


@needs_numba
@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_dwt_backends_agree(rng, order):
    f = daubechies_filters(order)
    for n in (2, 6, 64, 1002):
        x = rng.normal(size=n)
        a = dwt_periodic(x, f.lowpass, f.highpass, backend="numba")
        b = dwt_periodic(x, f.lowpass, f.highpass, backend="numpy")
        np.testing.assert_allclose(a[0], b[0], atol=1e-12)
        np.testing.assert_allclose(a[1], b[1], atol=1e-12)
        xa = idwt_periodic(*a, f.lowpass, f.highpass, backend="numba")
        xb = idwt_periodic(*b, f.lowpass, f.highpass, backend="numpy")
        np.testing.assert_allclose(xa, xb, atol=1e-12)


@needs_numba
def test_smo_backends_follow_same_path(rng):
    X = rng.normal(size=(80, 2))
    y = np.where(X[:, 0] + 0.5 * rng.normal(size=80) > 0, 1.0, -1.0)
    K = (0.5 * X @ X.T + 1.0) ** 3
    a = smo_solve(K, y, 1.0, tol=1e-6, backend="numba")
    b = smo_solve(K, y, 1.0, tol=1e-6, backend="numpy")
    assert a[2] == b[2] and a[3] and b[3]
    np.testing.assert_allclose(a[0], b[0], atol=1e-9)
    np.testing.assert_allclose(a[1], b[1], atol=1e-9)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.resolve("cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, ISPEAR_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from ispear import _backend; print(_backend.DEFAULT_BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    bench.main(["--repeat", "1"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("kernel") and len(lines) == 5
