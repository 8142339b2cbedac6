"""Compare the numba and numpy backends of the modular rank kernel.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.  The matrices
are boundary matrices of dual associahedra, the workload that dominates
homology and cotangent computations.
"""

import argparse
import time

from srdef import associahedron, kernels
from srdef.complex import boundary_matrix


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="*", default=[7, 8, 9])
    args = ap.parse_args(argv)

    if not kernels.HAVE_NUMBA:
        print("numba is unavailable; only the numpy backend can run")
    print(f"{'complex':>8} {'k':>2} {'shape':>13} {'nnz':>7} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for n in args.sizes:
        K = associahedron.build(n)
        for k in range(1, K.dim + 1):
            M = boundary_matrix(K, k)
            if M.nrows == 0 or M.ncols == 0:
                continue
            call = lambda b: kernels.rank_mod_p(M.indptr, M.indices, M.data, M.nrows, backend=b)  # noqa: E731
            t_np, r_np = _time(lambda: call("numpy"), args.repeat)
            if kernels.HAVE_NUMBA:
                call("numba")  # compile outside the timing
                t_nb, r_nb = _time(lambda: call("numba"), args.repeat)
                assert r_nb == r_np, (n, k, r_nb, r_np)
                speed = f"{t_np / t_nb:8.1f}x"
                t_nb_s = f"{t_nb:9.4f}"
            else:
                t_nb_s, speed = "        -", "       -"
            shape = f"{M.nrows}x{M.ncols}"
            print(f"{'A' + str(n):>8} {k:>2} {shape:>13} {len(M.data):>7} {t_np:9.4f} {t_nb_s} {speed}")


if __name__ == "__main__":
    main()
