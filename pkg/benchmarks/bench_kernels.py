"""Benchmark the compiled kernel against the numpy fallback.

Times the raw polynomial-matrix product at S_4 and S_5 sizes (the hot
operation behind the Hecke a-function table) and the end-to-end table
builds on each backend.

    python benchmarks/bench_kernels.py
"""

import time
from itertools import permutations

import numpy as np

from gkdim import _akernel_py
from gkdim import kernels as kernels_module
from gkdim.hecke import _build_a_table, _kl_element
from gkdim.permutations import Permutation

try:
    from gkdim import _akernel
except ImportError:
    _akernel = None


def time_call(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def synthetic(depth, size, density, seed):
    rng = np.random.default_rng(seed)
    arr = rng.integers(-6, 7, size=(depth, size, size))
    mask = rng.random((depth, size, size)) < density
    return np.ascontiguousarray((arr * mask).astype(np.int64))


def bench_products():
    print("raw polymat_matmul (best of 5)")
    header = f"{'case':<34}{'numpy fallback':>16}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    cases = [
        ("S4-like dense  (13,24,24)x(3,24,24)", 13, 24, 1.0),
        ("S5-like dense  (21,120,120)x(3,..)", 21, 120, 1.0),
        ("S5-like sparse 20% fill", 21, 120, 0.2),
        ("S5-like sparse 5% fill", 21, 120, 0.05),
    ]
    for label, depth, size, density in cases:
        a = synthetic(depth, size, density, seed=1)
        b = synthetic(3, size, density if density < 1 else 1.0, seed=2)
        t_py = time_call(_akernel_py.polymat_matmul, a, b)
        if _akernel is None:
            print(f"{label:<34}{t_py * 1e3:>13.2f} ms{'n/a':>12}")
            continue
        out_py = _akernel_py.polymat_matmul(a, b)
        out_cy = np.asarray(_akernel.polymat_matmul(a, b))
        assert np.array_equal(out_py, out_cy)
        t_cy = time_call(_akernel.polymat_matmul, a, b)
        print(
            f"{label:<34}{t_py * 1e3:>13.2f} ms{t_cy * 1e3:>9.2f} ms"
            f"{t_py / t_cy:>9.1f}x"
        )


def bench_tables():
    print()
    print("end-to-end a-function table (KL cache pre-warmed, best of 3)")
    for n in (4, 5):
        for ol in permutations(range(1, n + 1)):
            _kl_element(Permutation(ol))
    rows = []
    impls = [("numpy fallback", _akernel_py)]
    if _akernel is not None:
        impls.append(("cython", _akernel))
    original = kernels_module.polymat_matmul
    try:
        for label, impl in impls:
            kernels_module.polymat_matmul = impl.polymat_matmul
            for n in (4, 5):
                t = time_call(_build_a_table, n, repeats=3)
                rows.append((label, n, t))
    finally:
        kernels_module.polymat_matmul = original
    for label, n, t in rows:
        print(f"  S_{n} table via {label:<16}{t * 1e3:>10.1f} ms")


if __name__ == "__main__":
    print(f"selected backend at import: {kernels_module.backend_name()}")
    if _akernel is None:
        print("compiled kernel not built; showing fallback only")
    print()
    bench_products()
    bench_tables()
