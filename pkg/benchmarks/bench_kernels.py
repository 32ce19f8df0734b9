"""Benchmark: compiled Cython kernels vs the pure-Python fallback.

The batched consistency test dominates enumeration runtime, so this is the
number that justifies shipping the extension.  Run directly:

    python3 benchmarks/bench_kernels.py [N]
"""

import sys
import time

import numpy as np

from cliffordlab.kernels import HAVE_COMPILED, _pykernels

if HAVE_COMPILED:
    from cliffordlab.kernels import _ckernels
else:
    _ckernels = None


def make_systems(n, d, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.integers(d, size=(n, 6, 8))
    b = rng.integers(d, size=(n, 6))
    return A, b


def bench(fn, A, b, d):
    start = time.perf_counter()
    out = fn(A, b, d)
    return time.perf_counter() - start, out


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    d = 3
    A, b = make_systems(n, d)
    t_py, out_py = bench(_pykernels.batch_consistency, A, b, d)
    print(f"pure python : {n} systems in {t_py:.3f}s ({n / t_py:,.0f}/s)")
    if _ckernels is None:
        print("compiled    : extension not built")
        return
    t_c, out_c = bench(_ckernels.batch_consistency, A, b, d)
    print(f"compiled    : {n} systems in {t_c:.3f}s ({n / t_c:,.0f}/s)")
    assert np.array_equal(out_py, out_c), "kernel implementations disagree"
    print(f"speedup     : {t_py / t_c:.1f}x (results identical)")


if __name__ == "__main__":
    main()
