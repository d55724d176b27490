"""Benchmark the compiled kernels against the pure-NumPy fallback.

Times the two hot kernels (the oscillatory source profile and the Legendre
table) on identical inputs and reports the best-of-repeats wall clock for
each backend, plus an end-to-end spectrum scan under each backend selected
via the STRINGRAD_BACKEND environment variable in a subprocess.

Run:  python benchmarks/bench_kernels.py
"""
import os
import subprocess
import sys
import time

import numpy as np

from stringrad.kernels import _pyref

try:
    from stringrad.kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats=7):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    t = np.linspace(-1.0, 1.0, 200_001)
    cases = [
        ("fn_values(N=50)", lambda impl: impl.fn_values(50, t)),
        ("legendre_table(deg=64)", lambda impl: impl.legendre_table(64, t)),
    ]
    backends = [("numpy", _pyref)] + ([("cython", _fast)] if _fast else [])
    print(f"{'kernel':<26}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, call in cases:
        times = [best_of(lambda impl=impl: call(impl)) for _, impl in backends]
        row = f"{label:<26}" + "".join(f"{s * 1e3:>10.2f}ms" for s in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)


def bench_end_to_end():
    print("\nend-to-end spectrum scan (N = 1..40), backend via STRINGRAD_BACKEND:")
    for backend in ("python", "cython") if _fast else ("python",):
        env = dict(os.environ, STRINGRAD_BACKEND=backend)
        t0 = time.perf_counter()
        subprocess.run(
            [sys.executable, "-m", "stringrad", "spectrum", "--nmax", "40"],
            env=env,
            stdout=subprocess.DEVNULL,
            check=True,
        )
        print(f"  {backend:<8} {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    if _fast is None:
        print("compiled kernels unavailable; benchmarking the fallback only\n")
    bench_kernels()
    bench_end_to_end()
