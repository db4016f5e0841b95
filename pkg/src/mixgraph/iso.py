"""Isomorphism, automorphism and self-converse decisions for small mixed graphs.

Search is backtracking over vertex assignments.  Candidate images are pruned
by colour: vertices start coloured by their (undirected degree, out-degree,
in-degree) triple and the colouring is refined to a stable partition (each
vertex's colour also records the colours of its neighbours, per relation
kind) before every branching step.  Vertices are branched on in ascending
index order and candidates tried in ascending index order, so witnesses are
deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from mixgraph.graph import AnyGraph, MixedGraph, Permutation, converse

DEFAULT_COUNT_LIMIT = 10
DEFAULT_CANON_LIMIT = 8


class SizeLimitError(ValueError):
    """Exhaustive operation requested beyond its guarded vertex limit."""


@dataclass(frozen=True)
class IsoWitness:
    found: bool
    map: Optional[Permutation] = None

    def __bool__(self) -> bool:
        return self.found


class _Structure:
    """Relation matrix plus sparse neighbour lists for one graph."""

    __slots__ = ("n", "rel", "nbrs", "triples")

    def __init__(self, x: AnyGraph):
        n = x.n
        if isinstance(x, MixedGraph):
            rel = x.relation()
            triples = x.degree_triples()
        else:
            rel = [[0] * n for _ in range(n)]
            for u, v in x.edges:
                rel[u][v] = rel[v][u] = 1
            triples = [(d, 0, 0) for d in x.degrees()]
        self.n = n
        self.rel = rel
        self.nbrs = [[(u, r[u]) for u in range(n) if r[u]] for r in rel]
        self.triples = triples


def _initial_colors(sx: _Structure, sy: _Structure) -> tuple[list[int], list[int]]:
    palette = {t: i for i, t in enumerate(sorted(set(sx.triples) | set(sy.triples)))}
    return [palette[t] for t in sx.triples], [palette[t] for t in sy.triples]


def _refine(sx: _Structure, sy: _Structure, cx: list[int], cy: list[int]):
    """Jointly refine two colourings to stability; None if their colour histograms diverge."""
    if Counter(cx) != Counter(cy):
        return None
    ncls = len(set(cx) | set(cy))
    while True:
        sig_x = [(cx[v], tuple(sorted((r, cx[u]) for u, r in sx.nbrs[v]))) for v in range(sx.n)]
        sig_y = [(cy[v], tuple(sorted((r, cy[u]) for u, r in sy.nbrs[v]))) for v in range(sy.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig_x) | set(sig_y)))}
        cx = [palette[s] for s in sig_x]
        cy = [palette[s] for s in sig_y]
        if Counter(cx) != Counter(cy):
            return None
        if len(palette) == ncls:
            return cx, cy
        ncls = len(palette)


def _individualize(c: list[int], v: int, fresh: int) -> list[int]:
    c = list(c)
    c[v] = fresh
    return c


def _branch_vertex(cx: list[int]) -> Optional[int]:
    """Smallest vertex in a non-singleton colour class, or None if discrete."""
    sizes = Counter(cx)
    for v, col in enumerate(cx):
        if sizes[col] > 1:
            return v
    return None


def _search(sx: _Structure, sy: _Structure, cx: list[int], cy: list[int]) -> Optional[list[int]]:
    refined = _refine(sx, sy, cx, cy)
    if refined is None:
        return None
    cx, cy = refined
    v = _branch_vertex(cx)
    if v is None:
        where = {col: w for w, col in enumerate(cy)}
        f = [where[col] for col in cx]
        rx, ry = sx.rel, sy.rel
        for a in range(sx.n):
            ra, rb = rx[a], ry[f[a]]
            for b in range(sx.n):
                if ra[b] != rb[f[b]]:
                    return None
        return f
    fresh = max(max(cx), max(cy)) + 1
    cx_v = _individualize(cx, v, fresh)
    for w in range(sy.n):
        if cy[w] == cx[v]:
            f = _search(sx, sy, cx_v, _individualize(cy, w, fresh))
            if f is not None:
                return f
    return None


def _same_kind(x: AnyGraph, y: AnyGraph) -> bool:
    return isinstance(x, MixedGraph) == isinstance(y, MixedGraph)


def find_isomorphism(x: AnyGraph, y: AnyGraph) -> IsoWitness:
    """Find ``f`` with ``apply_permutation(x, f) == y``.

    Graphs of different order (or a :class:`Graph` against a
    :class:`MixedGraph`) are reported as not isomorphic.
    """
    if x.n != y.n or not _same_kind(x, y):
        return IsoWitness(False)
    if x == y:
        return IsoWitness(True, Permutation.identity(x.n))
    if len(x.edges) != len(y.edges):
        return IsoWitness(False)
    sx, sy = _Structure(x), _Structure(y)
    cx, cy = _initial_colors(sx, sy)
    f = _search(sx, sy, cx, cy)
    if f is None:
        return IsoWitness(False)
    return IsoWitness(True, Permutation(tuple(f)))


def is_self_converse(x: MixedGraph) -> IsoWitness:
    """Isomorphism from ``x`` onto its converse, if one exists."""
    if not x.arcs:
        return IsoWitness(True, Permutation.identity(x.n))
    return find_isomorphism(x, converse(x))


def _moves(s: _Structure, c: list[int], v: int) -> list[int]:
    """Vertices ``w != v`` in ``v``'s class reachable from ``v`` by a colour-preserving automorphism."""
    fresh = max(c) + 1
    cv = _individualize(c, v, fresh)
    return [w for w in range(s.n)
            if w != v and c[w] == c[v]
            and _search(s, s, cv, _individualize(c, w, fresh)) is not None]


def is_asymmetric(g: AnyGraph) -> bool:
    """True iff the identity is the only automorphism.

    Returns as soon as a non-identity automorphism is found.  Random graphs
    typically refine to a discrete colouring immediately, so this is cheap
    well into the hundreds of vertices.
    """
    s = _Structure(g)
    c, _ = _initial_colors(s, s)
    while True:
        c, _ = _refine(s, s, c, c)
        v = _branch_vertex(c)
        if v is None:
            return True
        fresh = max(c) + 1
        cv = _individualize(c, v, fresh)
        for w in range(s.n):
            if w != v and c[w] == c[v] and _search(s, s, cv, _individualize(c, w, fresh)) is not None:
                return False
        # every automorphism fixes v; continue in its stabilizer
        c = cv


def automorphism_count(x: AnyGraph, max_n: int = DEFAULT_COUNT_LIMIT) -> int:
    """Order of the automorphism group, via orbit-stabilizer over a point chain."""
    if x.n > max_n:
        raise SizeLimitError(f"automorphism_count limited to n <= {max_n}, got n={x.n}")
    s = _Structure(x)
    c, _ = _initial_colors(s, s)
    total = 1
    while True:
        c, _ = _refine(s, s, c, c)
        v = _branch_vertex(c)
        if v is None:
            return total
        total *= 1 + len(_moves(s, c, v))
        c = _individualize(c, v, max(c) + 1)


def canonical_form(x: MixedGraph, max_n: int = DEFAULT_CANON_LIMIT) -> bytes:
    """Lexicographically least text serialization over all relabelings.

    Equal outputs iff the graphs are isomorphic.  Cost is ``n!``; guarded by
    ``max_n``.
    """
    if x.n > max_n:
        raise SizeLimitError(f"canonical_form limited to n <= {max_n}, got n={x.n}")
    edges = sorted(x.edges)
    arcs = sorted(x.arcs)
    header = f"n {x.n} e {len(edges)} a {len(arcs)}"
    best = None
    for im in permutations(range(x.n)):
        lines = [f"E {im[u]} {im[v]}" if im[u] < im[v] else f"E {im[v]} {im[u]}" for u, v in edges]
        lines += [f"A {im[u]} {im[v]}" for u, v in arcs]
        lines.sort()
        text = "\n".join([header, *lines]) + "\n"
        if best is None or text < best:
            best = text
    return best.encode("ascii")
