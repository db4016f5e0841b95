import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import all_mixed, mixed_graphs, mixed_with_perm
from mixgraph.graph import apply_permutation, converse, make_mixed_graph
from mixgraph.spectral import (
    I,
    ONE,
    ZERO,
    CharPoly,
    GaussianInt,
    HermitianMatrix,
    are_cospectral,
    char_poly,
    hermitian_adjacency,
)

x_sym = sp.Symbol("x")


def sympy_charpoly(h):
    m = sp.Matrix(h.n, h.n, lambda j, k: h[j, k].re + sp.I * h[j, k].im)
    poly = sp.Poly(sp.expand(m.charpoly(x_sym).as_expr()), x_sym)
    coeffs = [sp.nsimplify(c) for c in reversed(poly.all_coeffs())]
    assert all(sp.im(c) == 0 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def test_gaussian_arithmetic():
    a, b = GaussianInt(2, 3), GaussianInt(-1, 4)
    assert a * b == GaussianInt(-14, 5)
    assert a + b == GaussianInt(1, 7)
    assert I * I == -ONE
    assert (a * a.conjugate()).im == 0 and a.norm() == 13


def test_hermitian_adjacency_examples():
    e = hermitian_adjacency(make_mixed_graph(2, [(0, 1)], []))
    assert e.entries == ((ZERO, ONE), (ONE, ZERO))
    a = hermitian_adjacency(make_mixed_graph(2, [], [(0, 1)]))
    assert a.entries == ((ZERO, I), (-I, ZERO))


def test_hermitian_matrix_validation():
    with pytest.raises(ValueError):
        HermitianMatrix(2, ((ZERO, I), (I, ZERO)))
    with pytest.raises(ValueError):
        HermitianMatrix(2, ((ONE, ZERO), (ZERO, ZERO)))


@given(mixed_graphs(max_n=6))
def test_converse_matrix_is_transpose(x):
    h = hermitian_adjacency(x)
    assert hermitian_adjacency(converse(x)) == h.transpose() == h.conjugate()


def test_char_poly_examples():
    assert char_poly(hermitian_adjacency(make_mixed_graph(3))).coeffs == (0, 0, 0, 1)
    assert char_poly(hermitian_adjacency(make_mixed_graph(2, [(0, 1)], []))).coeffs == (-1, 0, 1)
    cyc = make_mixed_graph(3, [], [(0, 1), (1, 2), (2, 0)])
    assert char_poly(hermitian_adjacency(cyc)).coeffs == (0, -3, 0, 1)
    assert str(char_poly(hermitian_adjacency(cyc))) == "x^3 - 3x"


def test_char_poly_matches_sympy_on_all_n3():
    for x in all_mixed(3):
        h = hermitian_adjacency(x)
        assert char_poly(h).coeffs == sympy_charpoly(h)


@settings(max_examples=40, deadline=None)
@given(mixed_graphs(min_n=1, max_n=7))
def test_char_poly_matches_sympy(x):
    h = hermitian_adjacency(x)
    assert char_poly(h).coeffs == sympy_charpoly(h)


@settings(max_examples=200)
@given(mixed_graphs(min_n=2, max_n=8))
def test_char_poly_coefficient_identities(x):
    p = char_poly(hermitian_adjacency(x))
    assert p.coeffs[-1] == 1
    assert p.coeffs[-2] == 0
    assert p.coeffs[-3] == -(len(x.edges) + len(x.arcs))


@given(mixed_with_perm(max_n=7))
def test_char_poly_relabel_invariant(xf):
    x, f = xf
    assert char_poly(hermitian_adjacency(apply_permutation(x, f))) == char_poly(hermitian_adjacency(x))


def test_are_cospectral_examples():
    edge = make_mixed_graph(2, [(0, 1)], [])
    arc = make_mixed_graph(2, [], [(0, 1)])
    assert are_cospectral(edge, arc)
    assert not are_cospectral(edge, make_mixed_graph(2))
    with pytest.raises(ValueError):
        are_cospectral(edge, make_mixed_graph(3))


def test_dimension_guard():
    with pytest.raises(ValueError):
        char_poly(hermitian_adjacency(make_mixed_graph(33)))


def test_charpoly_evaluation():
    p = CharPoly((-1, 0, 1))
    assert p(1) == 0 and p(3) == 8
