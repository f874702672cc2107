#!/usr/bin/env python3
"""Compare the compiled distance kernel against the numpy fallback.

Times `min_shifted_distances` (the O(N^2 * m) hot loop of fitness
assignment) for both backends across population sizes, plus the
end-to-end fitness call. Run from a checkout with the package installed:

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from icsde import _kernels_py
from icsde.fitness import icsde_fitness

try:
    from icsde import _kernels
except ImportError:
    _kernels = None


def _time(fn, *args, repeats=5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    rng = np.random.default_rng(0)
    print(f"{'N':>6} {'m':>3} {'python (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for n in (100, 200, 600, 1200):
        for m in (2, 3):
            norm = np.ascontiguousarray(rng.random((n, m)))
            start = np.arange(n, dtype=np.intp)
            t_py = _time(_kernels_py.min_shifted_distances, norm, start)
            if _kernels is None:
                print(f"{n:>6} {m:>3} {t_py * 1e3:>12.3f} {'unavailable':>14}")
                continue
            t_cy = _time(_kernels.min_shifted_distances, norm, start)
            out_py = _kernels_py.min_shifted_distances(norm, start)
            out_cy = _kernels.min_shifted_distances(norm, start)
            finite = np.isfinite(out_py)
            assert np.allclose(out_cy[finite], out_py[finite], atol=1e-13)
            print(
                f"{n:>6} {m:>3} {t_py * 1e3:>12.3f} {t_cy * 1e3:>14.3f} "
                f"{t_py / t_cy:>7.1f}x"
            )

    print("\nend-to-end fitness assignment (active backend):")
    for n in (200, 600):
        F = rng.random((n, 2)) * 5
        cvs = np.where(rng.random(n) < 0.5, 0.0, rng.random(n))
        t = _time(icsde_fitness, F, cvs)
        print(f"  N={n}: {t * 1e3:.3f} ms/call")


if __name__ == "__main__":
    main()
