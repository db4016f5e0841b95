"""Seeded random graphs G(n, p), random mixed graphs X(n, p), and the three experiments.

Each trial ``t`` draws from its own PCG64 stream seeded by
``SeedSequence(seed, spawn_key=(t,))``, so any trial can be replayed in
isolation and results do not depend on how trials are spread over workers.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from mixgraph._kernels import degree_codegree
from mixgraph.graph import Graph, MixedGraph, apply_permutation, converse, symmetric_subgraph
from mixgraph.iso import is_asymmetric, is_self_converse

EXPERIMENTS = ("asymmetry", "lemma1", "selfconverse")
DEFAULT_P = {"asymmetry": 0.25, "lemma1": 0.25, "selfconverse": 0.5}
DEFAULT_EPSILON = 0.1


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    p: float = 0.25
    trials: int = 100
    seed: int = 0
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.n < 0:
            raise ConfigError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError(f"p={self.p} outside [0, 1]")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if not 0.0 < self.epsilon < 1.0:
            raise ConfigError(f"epsilon={self.epsilon} outside (0, 1)")


@dataclass
class ExperimentReport:
    experiment: str
    config: ExperimentConfig
    successes: int
    trials: int
    auxiliary: dict = field(default_factory=dict)

    @property
    def estimate(self) -> float:
        return self.successes / self.trials

    @property
    def stderr(self) -> float:
        e = self.estimate
        return math.sqrt(e * (1.0 - e) / self.trials)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "experiment": self.experiment,
            "config": asdict(self.config),
            "estimate": self.estimate,
            "successes": self.successes,
            "trials": self.trials,
            "stderr": self.stderr,
            "auxiliary": self.auxiliary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def sample_adjacency(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Boolean adjacency of G(n, p); one uniform draw per pair in lexicographic pair order."""
    iu, ju = np.triu_indices(n, 1)
    hit = rng.random(iu.size) < p
    adj = np.zeros((n, n), dtype=np.bool_)
    adj[iu[hit], ju[hit]] = True
    adj[ju[hit], iu[hit]] = True
    return adj


def sample_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    hit = rng.random(iu.size) < p
    return Graph(n, frozenset(zip(iu[hit].tolist(), ju[hit].tolist())))


def sample_mixed(n: int, p: float, rng: np.random.Generator) -> MixedGraph:
    """X(n, p): per pair ``(i, j)``, ``i < j``, draw ``i -> j`` then ``j -> i``; both present means an edge."""
    iu, ju = np.triu_indices(n, 1)
    d = rng.random((iu.size, 2)) < p
    fwd, bwd = d[:, 0], d[:, 1]
    both = fwd & bwd
    edges = zip(iu[both].tolist(), ju[both].tolist())
    only_f = fwd & ~bwd
    only_b = bwd & ~fwd
    arcs = list(zip(iu[only_f].tolist(), ju[only_f].tolist()))
    arcs += zip(ju[only_b].tolist(), iu[only_b].tolist())
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


# -- per-trial bodies (module level so worker processes can pickle them) ---------

def _asymmetry_trial(cfg: ExperimentConfig, t: int):
    g = sample_graph(cfg.n, cfg.p, trial_rng(cfg.seed, t))
    return is_asymmetric(g), len(g.edges)


def _lemma1_trial(cfg: ExperimentConfig, t: int):
    adj = sample_adjacency(cfg.n, cfg.p, trial_rng(cfg.seed, t))
    min_deg, max_co = degree_codegree(adj)
    ok = min_deg >= cfg.n / 4 * (1 - cfg.epsilon) and max_co <= cfg.n / 8 * (1 + cfg.epsilon)
    return ok, min_deg, max_co, int(adj.sum()) // 2


def _selfconverse_trial(cfg: ExperimentConfig, t: int):
    x = sample_mixed(cfg.n, cfg.p, trial_rng(cfg.seed, t))
    w = is_self_converse(x)
    if w.found:
        assert apply_permutation(x, w.map) == converse(x)
        g = symmetric_subgraph(x)
        assert apply_permutation(g, w.map) == g
    return w.found, len(x.arcs)


def _run_chunk(args):
    body, cfg, start, stop = args
    return [body(cfg, t) for t in range(start, stop)]


def _run_trials(body: Callable, cfg: ExperimentConfig, workers: int) -> list:
    """Results in trial-index order whatever the worker count."""
    if workers <= 1 or cfg.trials < 2:
        return [body(cfg, t) for t in range(cfg.trials)]
    step = max(1, math.ceil(cfg.trials / (4 * workers)))
    chunks = [(body, cfg, s, min(s + step, cfg.trials)) for s in range(0, cfg.trials, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out = []
        for part in pool.map(_run_chunk, chunks):
            out.extend(part)
    return out


def _histogram(values) -> dict[str, int]:
    return {str(k): v for k, v in sorted(Counter(values).items())}


def run_asymmetry_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Fraction of G(n, p) samples with no non-identity automorphism."""
    res = _run_trials(_asymmetry_trial, cfg, workers)
    return ExperimentReport("asymmetry", cfg, sum(ok for ok, _ in res), cfg.trials,
                            {"edge_count_histogram": _histogram(m for _, m in res)})


def run_lemma1_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Fraction of G(n, p) samples with min degree >= n/4 (1-eps) and max codegree <= n/8 (1+eps).

    The thresholds are used as stated even though a vertex has n-1 potential
    neighbours; raw distributions are reported alongside.
    """
    if cfg.p != 0.25:
        raise ConfigError("the Lemma 1 experiment is defined for p = 1/4 only")
    res = _run_trials(_lemma1_trial, cfg, workers)
    n = cfg.n
    edges = sum(r[3] for r in res)
    aux = {
        "min_degree_threshold": n / 4 * (1 - cfg.epsilon),
        "max_codegree_threshold": n / 8 * (1 + cfg.epsilon),
        "min_degree_histogram": _histogram(r[1] for r in res),
        "max_codegree_histogram": _histogram(r[2] for r in res),
        "mean_degree": (2 * edges / (n * cfg.trials)) if n else 0.0,
        "max_codegree_observed": max(r[2] for r in res),
        "min_degree_observed": min(r[1] for r in res),
    }
    return ExperimentReport("lemma1", cfg, sum(r[0] for r in res), cfg.trials, aux)


def run_selfconverse_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Fraction of X(n, p) samples isomorphic to their converse (labeled probability)."""
    res = _run_trials(_selfconverse_trial, cfg, workers)
    return ExperimentReport("selfconverse", cfg, sum(ok for ok, _ in res), cfg.trials,
                            {"arc_count_histogram": _histogram(a for _, a in res)})


RUNNERS = {
    "asymmetry": run_asymmetry_experiment,
    "lemma1": run_lemma1_experiment,
    "selfconverse": run_selfconverse_experiment,
}
