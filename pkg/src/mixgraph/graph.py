"""Mixed graph data model.

A mixed graph on vertices ``0..n-1`` holds a set of undirected edges and a set
of directed arcs over disjoint vertex pairs.  A pair joined in both directions
is an edge, never two arcs, so every labeled mixed graph has exactly one
representation.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DuplicateError(GraphError):
    pass


class OverlapError(GraphError):
    """An edge and an arc share the same vertex pair."""


class BidirectedArcError(GraphError):
    """Both ``(u, v)`` and ``(v, u)`` were given as arcs."""


class GraphFormatError(GraphError):
    """Malformed text graph record."""


def _check_vertex(u: int, n: int) -> None:
    if not 0 <= u < n:
        raise VertexRangeError(f"vertex {u} out of range for n={n}")


def _norm_edge(e: Iterable[int], n: int) -> tuple[int, int]:
    u, v = e
    u, v = int(u), int(v)
    _check_vertex(u, n)
    _check_vertex(v, n)
    if u == v:
        raise SelfLoopError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


def _norm_arc(a: Sequence[int], n: int) -> tuple[int, int]:
    u, v = a
    u, v = int(u), int(v)
    _check_vertex(u, n)
    _check_vertex(v, n)
    if u == v:
        raise SelfLoopError(f"self-loop at {u}")
    return (u, v)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        object.__setattr__(self, "edges", frozenset(_norm_edge(e, self.n) for e in self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        seen = set()
        for e in edges:
            key = _norm_edge(e, n)
            if key in seen:
                raise DuplicateError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    def adjacency(self) -> np.ndarray:
        """Boolean adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=np.bool_)
        if self.edges:
            idx = np.array(sorted(self.edges), dtype=np.intp)
            a[idx[:, 0], idx[:, 1]] = True
            a[idx[:, 1], idx[:, 0]] = True
        return a

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class MixedGraph:
    """Mixed graph: undirected ``edges`` (``u < v``) plus directed ``arcs``.

    Construct through :func:`make_mixed_graph` when the input may contain
    duplicates; the constructor itself sees already-deduplicated sets.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        edges = frozenset(_norm_edge(e, self.n) for e in self.edges)
        arcs = frozenset(_norm_arc(a, self.n) for a in self.arcs)
        for u, v in arcs:
            if (v, u) in arcs:
                raise BidirectedArcError(f"arcs ({u},{v}) and ({v},{u}) both present; declare an edge")
            if (min(u, v), max(u, v)) in edges:
                raise OverlapError(f"pair {{{u},{v}}} is both an edge and an arc")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arcs", arcs)

    def relation(self) -> list[list[int]]:
        """Pair-state matrix: 0 none, 1 edge, 2 arc ``u->v``, 3 arc ``v->u``."""
        rel = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rel[u][v] = rel[v][u] = 1
        for u, v in self.arcs:
            rel[u][v] = 2
            rel[v][u] = 3
        return rel

    def degree_triples(self) -> list[tuple[int, int, int]]:
        """Per vertex ``(undirected degree, out-degree, in-degree)``."""
        und = [0] * self.n
        out = [0] * self.n
        inn = [0] * self.n
        for u, v in self.edges:
            und[u] += 1
            und[v] += 1
        for u, v in self.arcs:
            out[u] += 1
            inn[v] += 1
        return list(zip(und, out, inn))


AnyGraph = Union[Graph, MixedGraph]


def make_mixed_graph(n: int, edges: Iterable[Iterable[int]] = (),
                     arcs: Iterable[Sequence[int]] = ()) -> MixedGraph:
    """Validate edge and arc lists and build a :class:`MixedGraph`.

    Raises a distinct :class:`GraphError` subclass for each kind of defect:
    self-loop, out-of-range endpoint, duplicate, edge/arc overlap, and a
    bidirected arc pair.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    edge_set: set[tuple[int, int]] = set()
    for e in edges:
        key = _norm_edge(e, n)
        if key in edge_set:
            raise DuplicateError(f"duplicate edge {key}")
        edge_set.add(key)
    arc_set: set[tuple[int, int]] = set()
    for a in arcs:
        key = _norm_arc(a, n)
        if key in arc_set:
            raise DuplicateError(f"duplicate arc {key}")
        if (key[1], key[0]) in arc_set:
            raise BidirectedArcError(f"arcs {key} and {(key[1], key[0])} both present; declare an edge")
        if (min(key), max(key)) in edge_set:
            raise OverlapError(f"pair {set(key)} is both an edge and an arc")
        arc_set.add(key)
    return MixedGraph(n, frozenset(edge_set), frozenset(arc_set))


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1`` stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        if other.n != self.n:
            raise ValueError("length mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its smallest element."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def cycle_notation(self) -> str:
        """E.g. ``(0 1)(2 4 3)``; the identity is ``()``."""
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def converse(x: MixedGraph) -> MixedGraph:
    """Reverse every arc; edges are unchanged."""
    return MixedGraph(x.n, x.edges, frozenset((v, u) for u, v in x.arcs))


def symmetric_subgraph(x: MixedGraph) -> Graph:
    return Graph(x.n, x.edges)


def underlying_graph(x: MixedGraph) -> Graph:
    return Graph(x.n, x.edges | frozenset((min(u, v), max(u, v)) for u, v in x.arcs))


def apply_permutation(x: AnyGraph, f: Permutation) -> AnyGraph:
    """Relabel vertices: edge ``{u,v}`` becomes ``{f(u),f(v)}``, arc ``(u,v)`` becomes ``(f(u),f(v))``."""
    if f.n != x.n:
        raise ValueError(f"permutation length {f.n} does not match n={x.n}")
    im = f.images
    edges = frozenset((im[u], im[v]) if im[u] < im[v] else (im[v], im[u]) for u, v in x.edges)
    if isinstance(x, Graph):
        return Graph(x.n, edges)
    return MixedGraph(x.n, edges, frozenset((im[u], im[v]) for u, v in x.arcs))


def neighborhood_stats(g: Graph) -> tuple[int, int]:
    """Return ``(min degree, max common-neighbour count over vertex pairs)``."""
    from mixgraph._kernels import degree_codegree

    if g.n == 0:
        return 0, 0
    return degree_codegree(g.adjacency())


# -- text format -------------------------------------------------------------

def to_text(x: AnyGraph) -> str:
    """Serialize as ``n <n> e <|E|> a <|A|>`` followed by sorted ``E u v`` / ``A u v`` lines."""
    arcs = x.arcs if isinstance(x, MixedGraph) else frozenset()
    lines = sorted([f"E {u} {v}" for u, v in x.edges] + [f"A {u} {v}" for u, v in arcs])
    header = f"n {x.n} e {len(x.edges)} a {len(arcs)}"
    return "\n".join([header, *lines]) + "\n"


def _parse_record(lines: list[str], where: str) -> MixedGraph:
    head = lines[0].split()
    if len(head) != 6 or head[0] != "n" or head[2] != "e" or head[4] != "a":
        raise GraphFormatError(f"{where}: bad header {lines[0]!r}")
    try:
        n, ne, na = int(head[1]), int(head[3]), int(head[5])
    except ValueError as exc:
        raise GraphFormatError(f"{where}: bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != ne + na:
        raise GraphFormatError(f"{where}: expected {ne + na} pair lines, found {len(body)}")
    edges, arcs = [], []
    for line in body:
        tok = line.split()
        if len(tok) != 3 or tok[0] not in ("E", "A"):
            raise GraphFormatError(f"{where}: bad line {line!r}")
        try:
            u, v = int(tok[1]), int(tok[2])
        except ValueError as exc:
            raise GraphFormatError(f"{where}: bad line {line!r}") from exc
        if tok[0] == "E":
            if u >= v:
                raise GraphFormatError(f"{where}: edge line must have u < v: {line!r}")
            edges.append((u, v))
        else:
            arcs.append((u, v))
    if len(edges) != ne or len(arcs) != na:
        raise GraphFormatError(f"{where}: header counts do not match body")
    return make_mixed_graph(n, edges, arcs)


def from_text(text: str) -> list[MixedGraph]:
    """Parse one or more records.  Blank lines and ``#`` comments are ignored."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    graphs = []
    i = 0
    while i < len(lines):
        if not lines[i].startswith("n "):
            raise GraphFormatError(f"record {len(graphs)}: expected header, got {lines[i]!r}")
        j = i + 1
        while j < len(lines) and not lines[j].startswith("n "):
            j += 1
        graphs.append(_parse_record(lines[i:j], f"record {len(graphs)}"))
        i = j
    return graphs


def read_graphs(path: str | Path) -> list[MixedGraph]:
    graphs = from_text(Path(path).read_text(encoding="ascii"))
    if not graphs:
        raise GraphFormatError(f"{path}: no graph records")
    return graphs


def write_graphs(path: str | Path, graphs: Iterable[AnyGraph]) -> None:
    Path(path).write_text("".join(to_text(g) for g in graphs), encoding="ascii")
