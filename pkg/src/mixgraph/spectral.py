"""Hermitian adjacency matrices and exact characteristic polynomials.

Convention: entry ``(u, v)`` is 1 for an edge ``{u, v}``, ``i`` for an arc
``u -> v``, ``-i`` for an arc ``v -> u``, and 0 otherwise.  Reversing every
arc replaces the matrix by its transpose (equivalently its entrywise
conjugate), so a mixed graph and its converse always share a characteristic
polynomial.

The polynomial is computed with Berkowitz's algorithm, which uses only ring
operations, over the Gaussian integers.  No floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from mixgraph.graph import MixedGraph

DEFAULT_MAX_DIM = 32


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __add__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"{self.re}{self.im:+d}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


@dataclass(frozen=True)
class HermitianMatrix:
    n: int
    entries: tuple[tuple[GaussianInt, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must be n x n")
        for j in range(self.n):
            if self.entries[j][j] != ZERO:
                raise ValueError("diagonal must be zero")
            for k in range(j + 1, self.n):
                if self.entries[j][k] != self.entries[k][j].conjugate():
                    raise ValueError(f"not Hermitian at ({j},{k})")

    def transpose(self) -> HermitianMatrix:
        """Equal to the entrywise conjugate, since the matrix is Hermitian."""
        return HermitianMatrix(self.n, tuple(
            tuple(self.entries[k][j] for k in range(self.n)) for j in range(self.n)))

    def conjugate(self) -> HermitianMatrix:
        return HermitianMatrix(self.n, tuple(tuple(e.conjugate() for e in r) for r in self.entries))

    def __getitem__(self, jk: tuple[int, int]) -> GaussianInt:
        return self.entries[jk[0]][jk[1]]


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = "" if (mono and abs(c) == 1) else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + mono
            else:
                out += (" - " if c < 0 else " + ") + mag + mono
        return out or "0"


def hermitian_adjacency(x: MixedGraph) -> HermitianMatrix:
    rows = [[ZERO] * x.n for _ in range(x.n)]
    for u, v in x.edges:
        rows[u][v] = rows[v][u] = ONE
    for u, v in x.arcs:
        rows[u][v] = I
        rows[v][u] = -I
    return HermitianMatrix(x.n, tuple(tuple(r) for r in rows))


def _berkowitz(a: list[list[GaussianInt]]) -> list[GaussianInt]:
    """Coefficients of det(xI - A), highest degree first."""
    n = len(a)
    poly = [ONE]
    for k in range(n):
        # leading (k+1)x(k+1) block: previous block B, column col, row row, corner a[k][k]
        col = [a[i][k] for i in range(k)]
        row = a[k][:k]
        # Toeplitz column: 1, -a_kk, -R C, -R B C, ..., -R B^(k-1) C
        toeplitz = [ONE, -a[k][k]]
        vec = col
        for _ in range(k):
            toeplitz.append(-_dot(row, vec))
            vec = [_dot(a[i][:k], vec) for i in range(k)]
        new = []
        for i in range(k + 2):
            s = ZERO
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s = s + toeplitz[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly


def _dot(row, vec) -> GaussianInt:
    s = ZERO
    for r, v in zip(row, vec):
        s = s + r * v
    return s


def char_poly(h: HermitianMatrix, max_dim: int = DEFAULT_MAX_DIM) -> CharPoly:
    """Exact ``det(xI - H)``."""
    if h.n > max_dim:
        raise ValueError(f"char_poly limited to dimension <= {max_dim}, got {h.n}")
    coeffs = _berkowitz([list(r) for r in h.entries])
    for c in coeffs:
        # a nonzero imaginary part here means the algorithm is broken, not the input
        assert c.im == 0, f"non-real characteristic coefficient {c}"
    return CharPoly(tuple(c.re for c in reversed(coeffs)))


def are_cospectral(x: MixedGraph, y: MixedGraph) -> bool:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    return char_poly(hermitian_adjacency(x)) == char_poly(hermitian_adjacency(y))
