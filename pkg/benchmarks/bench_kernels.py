"""Compare the numba and numpy paths of the hot kernels.

    python benchmarks/bench_kernels.py [--oracle-n 5] [--codegree-n 400] [--repeat 3]
"""

import argparse
import time

import numpy as np

from mixgraph._kernels import degree_codegree, orbit_keys
from mixgraph.random_models import sample_adjacency, trial_rng


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--oracle-n", type=int, default=5)
    ap.add_argument("--codegree-n", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # warm the JIT so compile time is not counted
    orbit_keys(3, backend="numba")
    degree_codegree(np.eye(4, dtype=bool), backend="numba")

    print(f"{'kernel':<28}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    tn, a = best_of(lambda: orbit_keys(args.oracle_n, backend="numba"), args.repeat)
    tp, b = best_of(lambda: orbit_keys(args.oracle_n, backend="numpy"), args.repeat)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    print(f"{f'orbit_keys n={args.oracle_n}':<28}{tn:>12.3f}{tp:>12.3f}{tp / tn:>10.1f}")

    adj = sample_adjacency(args.codegree_n, 0.25, trial_rng(0, 0))
    tn, a = best_of(lambda: degree_codegree(adj, backend="numba"), args.repeat)
    tp, b = best_of(lambda: degree_codegree(adj, backend="numpy"), args.repeat)
    assert a == b
    print(f"{f'degree_codegree n={args.codegree_n}':<28}{tn:>12.4f}{tp:>12.4f}{tp / tn:>10.1f}")


if __name__ == "__main__":
    main()
