"""Throughput comparison of the compiled and pure kernel backends.

Runs each hot kernel over a sweep of batch sizes and prints rows/s for
both backends plus the speedup.  Usage:

    python3 benchmarks/bench_kernels.py [--repeats 200] [--sizes 256,1024,4096]
"""

import argparse
import time

import numpy as np

from locokit.kernels import pure

try:
    from locokit.kernels import _native as native
except ImportError:
    native = None


def _time(fn, repeats):
    fn()                                # warm up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def make_inputs(n, rng):
    M, K, J = 6, 100, 12
    grids = rng.normal(size=(M, K, J))
    lo = rng.integers(0, M - 1, n)
    return {
        "blend_pose_batch": (
            grids, lo, lo + 1, rng.random(n), rng.random(n),
        ),
        "gait_errors_batch": (
            rng.normal(size=(n, J)), rng.normal(size=(n, J)),
            rng.normal(size=(n, 3)), rng.normal(size=(n, 3)),
            rng.normal(size=(n, J)), rng.normal(size=(n, J)),
            np.array([4, 10], dtype=np.intp),
        ),
        "exp_terms_batch": (
            np.abs(rng.normal(size=(n, 4))),
            np.array([5.0, 4.0, 10.0, 5.0]),
        ),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--sizes", default="256,1024,4096,16384")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if native is None:
        print("compiled backend not built; benchmarking pure only")

    rng = np.random.default_rng(0)
    header = f"{'kernel':<20}{'batch':>8}{'pure rows/s':>16}"
    if native is not None:
        header += f"{'native rows/s':>16}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        inputs = make_inputs(n, rng)
        for name, arg_tuple in inputs.items():
            t_pure = _time(lambda: getattr(pure, name)(*arg_tuple),
                           args.repeats)
            line = f"{name:<20}{n:>8}{n / t_pure:>16.3e}"
            if native is not None:
                t_nat = _time(lambda: getattr(native, name)(*arg_tuple),
                              args.repeats)
                line += f"{n / t_nat:>16.3e}{t_pure / t_nat:>9.2f}x"
                got_p = getattr(pure, name)(*arg_tuple)
                got_n = getattr(native, name)(*arg_tuple)
                assert np.array_equal(got_p, got_n), f"{name}: backends differ"
            print(line)
        print()


if __name__ == "__main__":
    main()
