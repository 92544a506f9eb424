"""Compare the numba and numpy backends of the oracle kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints the best wall time of each backend per workload and checks that the
two backends return identical arrays.
"""

import argparse
import time

import numpy as np

from kronsub import _kernels
from kronsub.kroncore import enumerate_invariants
from kronsub.oracle import _pad_pairs


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def rank_workloads(rng):
    for p, (N, r, c) in ((2, (200_000, 4, 6)), (3, (50_000, 8, 8)), (5, (20_000, 12, 14))):
        yield f"rank mod {p}: {N} x {r}x{c}", lambda b, m=rng.integers(0, p, (N, r, c)), p=p: \
            _kernels.batch_rank_mod_p(m, p, b)


def feasible_workloads():
    for n, mult in ((3, 3), (4, 3)):
        invs = list(enumerate_invariants(n, mult))
        A, C = _pad_pairs([(a, c) for a in invs for c in invs])
        yield f"linking system: {len(A)} pairs, n <= {n}", lambda b, A=A, C=C: _kernels.linking_feasible_batch(A, C, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'workload':44s} {'numpy':>9s} {'numba':>9s} {'speedup':>8s}")
    for name, fn in [*rank_workloads(rng), *feasible_workloads()]:
        fn("numba")  # compile outside the timing
        t_np, out_np = best_of(lambda: fn("numpy"), args.repeat)
        t_nb, out_nb = best_of(lambda: fn("numba"), args.repeat)
        if not np.array_equal(out_np, out_nb):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:44s} {t_np:8.3f}s {t_nb:8.3f}s {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
