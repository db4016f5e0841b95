from itertools import combinations, permutations, product

import pytest
from hypothesis import strategies as st

from mixgraph.graph import MixedGraph, Permutation, apply_permutation


def mixed_from_states(n, states):
    """Build a mixed graph from one state per lexicographic pair: 0 none, 1 edge, 2 i->j, 3 j->i."""
    edges, arcs = [], []
    for (i, j), s in zip(combinations(range(n), 2), states):
        if s == 1:
            edges.append((i, j))
        elif s == 2:
            arcs.append((i, j))
        elif s == 3:
            arcs.append((j, i))
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


def all_mixed(n):
    """Every labeled mixed graph on n vertices, enumerated independently of the oracle module."""
    m = n * (n - 1) // 2
    for states in product(range(4), repeat=m):
        yield mixed_from_states(n, states)


def brute_isomorphic(x, y):
    if x.n != y.n:
        return False
    return any(apply_permutation(x, Permutation(p)) == y for p in permutations(range(x.n)))


def brute_automorphisms(x):
    return [Permutation(p) for p in permutations(range(x.n))
            if apply_permutation(x, Permutation(p)) == x]


@st.composite
def mixed_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    states = draw(st.lists(st.integers(0, 3), min_size=m, max_size=m))
    return mixed_from_states(n, states)


@st.composite
def mixed_with_perm(draw, min_n=0, max_n=7):
    x = draw(mixed_graphs(min_n, max_n))
    images = draw(st.permutations(list(range(x.n))))
    return x, Permutation(tuple(images))


# -- acceptance reporting ---------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _ACCEPTANCE.append((mark.args[0], mark.args[1], item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, name, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{num}: {title} ({name})")
