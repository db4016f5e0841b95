import os
import subprocess
import sys

import numpy as np
import pytest

from mixgraph import _kernels
from mixgraph._kernels import degree_codegree, orbit_keys, pair_action_tables
from mixgraph.random_models import sample_adjacency, trial_rng


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_keys_backends_agree(n):
    a = orbit_keys(n, backend="numba")
    b = orbit_keys(n, backend="numpy")
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_orbit_key_is_minimum_of_class():
    keys, _ = orbit_keys(3)
    assert (keys <= np.arange(keys.size)).all()
    assert (keys[keys] == keys).all()


def test_pair_action_tables_identity_row():
    target, flip = pair_action_tables(4)
    assert (target[0] == np.arange(6)).all() and not flip[0].any()


@pytest.mark.parametrize("n, p, seed", [(2, 0.5, 0), (10, 0.3, 1), (65, 0.25, 2), (130, 0.5, 3), (200, 0.1, 4)])
def test_degree_codegree_backends_agree(n, p, seed):
    adj = sample_adjacency(n, p, trial_rng(seed, 0))
    a = adj.astype(int)
    co = a @ a
    np.fill_diagonal(co, -1)
    expected = (int(a.sum(1).min()), int(co.max()) if n > 1 else 0)
    assert degree_codegree(adj, backend="numba") == expected
    assert degree_codegree(adj, backend="numpy") == expected


def test_env_flag_selects_numpy():
    env = dict(os.environ, MIXGRAPH_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", "from mixgraph import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_default_backend():
    if os.environ.get("MIXGRAPH_NUMBA", "1") not in ("0", "false", "no", "off"):
        assert _kernels.BACKEND == "numba"
