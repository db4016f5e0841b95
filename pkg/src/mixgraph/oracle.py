"""Brute-force ground truth: enumerate every labeled mixed graph of order n.

A labeled mixed graph is a base-4 numeral with one digit per vertex pair,
pairs in lexicographic order, first pair most significant.  Digits: 0
non-adjacent, 1 edge, 2 arc low->high, 3 arc high->low.  Isomorphism
classes and self-conversality come from the orbit-key kernel, which
relabels every code under every permutation.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from mixgraph._kernels import orbit_keys, pair_list
from mixgraph.graph import MixedGraph
from mixgraph.iso import canonical_form, is_self_converse

DEFAULT_MAX_N = 4
OPT_IN_MAX_N = 5


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleCensus:
    n: int
    labeled_total: int
    labeled_selfconverse: int
    unlabeled_total: int
    unlabeled_selfconverse: int


def decode(n: int, code: int) -> MixedGraph:
    pairs = pair_list(n)
    edges, arcs = [], []
    for k, (i, j) in enumerate(pairs):
        d = (code >> (2 * (len(pairs) - 1 - k))) & 3
        if d == 1:
            edges.append((i, j))
        elif d == 2:
            arcs.append((i, j))
        elif d == 3:
            arcs.append((j, i))
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


def encode(x: MixedGraph) -> int:
    code = 0
    for i, j in pair_list(x.n):
        if (i, j) in x.edges:
            d = 1
        elif (i, j) in x.arcs:
            d = 2
        elif (j, i) in x.arcs:
            d = 3
        else:
            d = 0
        code = 4 * code + d
    return code


def _guard(n: int, allow_n5: bool) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    limit = OPT_IN_MAX_N if allow_n5 else DEFAULT_MAX_N
    if n > limit:
        hint = " (pass allow_n5=True / --allow-n5 for n=5)" if n == OPT_IN_MAX_N else ""
        raise OracleLimitError(f"brute force limited to n <= {limit}{hint}")


@lru_cache(maxsize=None)
def _keys(n: int) -> tuple[np.ndarray, np.ndarray]:
    return orbit_keys(n)


def class_keys(n: int, allow_n5: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """``(keys, converse_keys)`` indexed by code; see :func:`mixgraph._kernels.orbit_keys`."""
    _guard(n, allow_n5)
    return _keys(n)


def brute_force_census(n: int, allow_n5: bool = False, method: str = "kernel") -> OracleCensus:
    """Exhaustive census of order ``n``.

    ``method="kernel"`` uses the orbit-key kernel (fast; n=5 in seconds).
    ``method="reference"`` classifies each labeled graph with
    :func:`~mixgraph.iso.canonical_form` and decides self-conversality with
    :func:`~mixgraph.iso.is_self_converse`; practical up to n=4.
    """
    if method == "reference":
        _guard(n, allow_n5)
        return _reference_census(n)
    if method != "kernel":
        raise ValueError(f"unknown method {method!r}")
    keys, conv = class_keys(n, allow_n5)
    sc = keys == conv
    return OracleCensus(
        n=n,
        labeled_total=int(keys.size),
        labeled_selfconverse=int(sc.sum()),
        unlabeled_total=int(np.unique(keys).size),
        unlabeled_selfconverse=int(np.unique(keys[sc]).size),
    )


def _reference_census(n: int) -> OracleCensus:
    total = 4 ** (n * (n - 1) // 2)
    classes: set[bytes] = set()
    sc_classes: set[bytes] = set()
    labeled_sc = 0
    for code in range(total):
        x = decode(n, code)
        key = canonical_form(x)
        classes.add(key)
        if is_self_converse(x).found:
            labeled_sc += 1
            sc_classes.add(key)
    return OracleCensus(n, total, labeled_sc, len(classes), len(sc_classes))


def labeled_selfconverse_fraction(n: int, allow_n5: bool = False) -> Fraction:
    c = brute_force_census(n, allow_n5)
    return Fraction(c.labeled_selfconverse, c.labeled_total)


def class_representatives(n: int, allow_n5: bool = False) -> list[MixedGraph]:
    """One graph per isomorphism class: the one whose code is the class key."""
    keys, _ = class_keys(n, allow_n5)
    return [decode(n, int(k)) for k in np.unique(keys)]


CSV_FIELDS = ["n", "labeled_total", "labeled_selfconverse", "M", "S", "f_exact", "labeled_exact"]


def census_row(c: OracleCensus) -> dict:
    f = Fraction(c.unlabeled_selfconverse, c.unlabeled_total)
    lf = Fraction(c.labeled_selfconverse, c.labeled_total)
    return {
        "n": c.n,
        "labeled_total": str(c.labeled_total),
        "labeled_selfconverse": str(c.labeled_selfconverse),
        "M": str(c.unlabeled_total),
        "S": str(c.unlabeled_selfconverse),
        "f_exact": f"{f.numerator}/{f.denominator}",
        "labeled_exact": f"{lf.numerator}/{lf.denominator}",
    }


def oracle_csv(results: list[OracleCensus]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for c in results:
        w.writerow(census_row(c))
    return buf.getvalue()


def oracle_json(results: list[OracleCensus]) -> str:
    return json.dumps({"schema": 1, "kind": "oracle", "rows": [census_row(c) for c in results]}, indent=2) + "\n"

