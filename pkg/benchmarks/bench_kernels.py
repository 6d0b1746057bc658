"""Benchmark: compiled kernels vs the pure-Python fallback.

Micro-benchmarks time the two hot loops directly; the end-to-end rows swap
the backend module attribute and time representative workloads (an
argument-principle count over the truncated F0 and a short curve trace).

Run:  python benchmarks/bench_kernels.py [--reps N]
"""

import argparse
import cmath
import math
import time

from e2crit import _backend, _kernels_py
from e2crit.qseries import _sigma

try:
    from e2crit import _kernels_cy
except ImportError:
    _kernels_cy = None


def timeit(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def micro_rows(reps):
    coeffs = _sigma(3, 64)
    q = cmath.exp(2j * math.pi * complex(0.3, 0.9))
    x = cmath.exp(2j * math.pi * complex(0.13, 0.27 * 0.9))
    rows = []
    for name, call in (
        ("horner n=40", lambda k: k.horner(coeffs, q, 40)),
        ("wp_sums n=30", lambda k: k.wp_sums(x, q, 30)),
    ):
        t_py = timeit(lambda: call(_kernels_py), reps)
        t_cy = timeit(lambda: call(_kernels_cy), reps) if _kernels_cy else None
        rows.append((name, t_py, t_cy))
    return rows


def end_to_end_rows(reps):
    from e2crit import eval_Zrs2, eval_fC, f0_contour, count_zeros, trace_curve

    contour = f0_contour()

    def workload_count():
        assert count_zeros(lambda t: eval_fC(0.5, t), contour) == 1

    def workload_count_z2():
        assert count_zeros(lambda t: eval_Zrs2((1 / 6, 1 / 6), t), contour) == 1

    def workload_trace():
        trace_curve("zero", 0.2, 0.8, 9)

    rows = []
    for name, fn in (("count f_1/2 over F0", workload_count),
                     ("count Z2_(1/6,1/6) over F0", workload_count_z2),
                     ("trace zero branch, 9 samples", workload_trace)):
        _backend.kernels = _kernels_py
        t_py = timeit(fn, max(1, reps // 20))
        t_cy = None
        if _kernels_cy:
            _backend.kernels = _kernels_cy
            t_cy = timeit(fn, max(1, reps // 20))
        rows.append((name, t_py, t_cy))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--reps", type=int, default=2000)
    args = parser.parse_args()

    print(f"active backend at import: {_backend.backend_name()}")
    if _kernels_cy is None:
        print("compiled kernel not built; timing the fallback only")
    rows = micro_rows(args.reps) + end_to_end_rows(args.reps)
    print(f"{'workload':<32} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, t_py, t_cy in rows:
        if t_cy:
            print(f"{name:<32} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us "
                  f"{t_py / t_cy:>8.1f}x")
        else:
            print(f"{name:<32} {t_py * 1e6:>10.1f}us {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
