"""Hot numeric kernels with a numba path and a pure-numpy path.

Set ``MIXGRAPH_NUMBA=0`` in the environment (before import) to force the numpy
path.  Both paths return identical results; ``benchmarks/bench_kernels.py``
compares their speed.

Kernels:

* ``orbit_keys`` -- for every labeled mixed graph on ``n`` vertices (base-4
  pair-state code) the minimum code over all relabelings, for the graph and
  for its converse.  Drives the brute-force oracle.
* ``degree_codegree`` -- minimum degree and maximum common-neighbour count of
  an undirected graph.
"""

from __future__ import annotations

import functools
import os
from itertools import combinations, permutations

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("MIXGRAPH_NUMBA", "1").lower() not in ("0", "false", "no", "off")

if numba is not None:
    njit = functools.partial(numba.njit, cache=True)
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

BACKEND = "numba" if USE_NUMBA else "numpy"

# pair states; arc states swap under converse and under endpoint exchange
NONE, EDGE, ARC_FWD, ARC_BWD = 0, 1, 2, 3
_FLIP = np.array([0, 1, 3, 2], dtype=np.int64)


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return list(combinations(range(n), 2))


def pair_action_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """For each permutation of ``range(n)`` (lexicographic order) and each pair index ``k``:
    the target pair index and whether the pair's orientation is reversed.

    Returns ``(target, flip)`` of shape ``(n!, C(n,2))``.
    """
    pairs = pair_list(n)
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    target = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    flip = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    for r, f in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = f[i], f[j]
            if a < b:
                target[r, k] = index[(a, b)]
            else:
                target[r, k] = index[(b, a)]
                flip[r, k] = 1
    return target, flip


# -- orbit keys ------------------------------------------------------------------

@njit
def _orbit_keys_numba(n_pairs, target, flip):
    total = 4 ** n_pairs
    n_perm = target.shape[0]
    keys = np.empty(total, dtype=np.int64)
    conv_keys = np.empty(total, dtype=np.int64)
    weight = np.empty(n_pairs, dtype=np.int64)
    for k in range(n_pairs):
        weight[k] = 4 ** (n_pairs - 1 - k)
    digits = np.empty(n_pairs, dtype=np.int64)
    for code in range(total):
        c = code
        for k in range(n_pairs - 1, -1, -1):
            digits[k] = c & 3
            c >>= 2
        best = total
        best_conv = total
        for r in range(n_perm):
            s = 0
            sc = 0
            for k in range(n_pairs):
                d = digits[k]
                t = weight[target[r, k]]
                # relabeled digit; the converse additionally swaps arc states
                if d >= 2:
                    if flip[r, k] == 1:
                        s += (5 - d) * t
                        sc += d * t
                    else:
                        s += d * t
                        sc += (5 - d) * t
                else:
                    s += d * t
                    sc += d * t
            if s < best:
                best = s
            if sc < best_conv:
                best_conv = sc
        keys[code] = best
        conv_keys[code] = best_conv
    return keys, conv_keys


def _orbit_keys_numpy(n_pairs, target, flip):
    total = 4 ** n_pairs
    codes = np.arange(total, dtype=np.int64)
    digits = [(codes >> (2 * (n_pairs - 1 - k))) & 3 for k in range(n_pairs)]
    conv_digits = [_FLIP[d] for d in digits]
    weight = 4 ** (n_pairs - 1 - np.arange(n_pairs, dtype=np.int64))
    keys = np.full(total, total, dtype=np.int64)
    conv_keys = np.full(total, total, dtype=np.int64)
    s = np.empty(total, dtype=np.int64)
    sc = np.empty(total, dtype=np.int64)
    for r in range(target.shape[0]):
        s[:] = 0
        sc[:] = 0
        for k in range(n_pairs):
            w = weight[target[r, k]]
            if flip[r, k]:
                s += conv_digits[k] * w
                sc += digits[k] * w
            else:
                s += digits[k] * w
                sc += conv_digits[k] * w
        np.minimum(keys, s, out=keys)
        np.minimum(conv_keys, sc, out=conv_keys)
    return keys, conv_keys


def orbit_keys(n: int, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Canonical integer keys for every labeled mixed graph of order ``n``.

    ``keys[c]`` is the minimum code over all relabelings of the graph with
    code ``c``; ``conv_keys[c]`` is the same for its converse.  Two codes are
    isomorphic iff their keys agree; a graph is self-converse iff
    ``keys[c] == conv_keys[c]``.
    """
    n_pairs = n * (n - 1) // 2
    if n_pairs == 0:
        return np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64)
    target, flip = pair_action_tables(n)
    backend = backend or BACKEND
    if backend == "numba":
        return _orbit_keys_numba(n_pairs, target, flip)
    return _orbit_keys_numpy(n_pairs, target, flip)


# -- degree / codegree -------------------------------------------------------------

@njit
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit
def _degree_codegree_numba(adj):
    n = adj.shape[0]
    words = (n + 63) // 64
    bits = np.zeros((n, words), dtype=np.uint64)
    min_deg = n
    for u in range(n):
        d = 0
        for v in range(n):
            if adj[u, v]:
                bits[u, v // 64] |= np.uint64(1) << np.uint64(v % 64)
                d += 1
        if d < min_deg:
            min_deg = d
    max_co = 0
    for u in range(n):
        for v in range(u + 1, n):
            c = 0
            for w in range(words):
                c += _popcount64(bits[u, w] & bits[v, w])
            if c > max_co:
                max_co = c
    return min_deg, max_co


def _degree_codegree_numpy(adj):
    n = adj.shape[0]
    a = adj.astype(np.float64)
    min_deg = int(a.sum(axis=1).min())
    if n < 2:
        return min_deg, 0
    co = a @ a
    np.fill_diagonal(co, -1.0)
    return min_deg, int(co.max())


def degree_codegree(adj: np.ndarray, backend: str | None = None) -> tuple[int, int]:
    """``(min degree, max codegree)`` of a symmetric boolean adjacency matrix."""
    adj = np.ascontiguousarray(adj, dtype=np.bool_)
    if adj.shape[0] == 0:
        return 0, 0
    backend = backend or BACKEND
    if backend == "numba":
        d, c = _degree_codegree_numba(adj)
        return int(d), int(c)
    return _degree_codegree_numpy(adj)
