"""Dependency estimators on paired samples and on graphs.

Estimators return ``None`` for the undefined case (a zero-variance
denominator) instead of raising, so replication loops can count and skip it.
"""

from __future__ import annotations

import numpy as np

from .pair_models import PairedSample
from .sampling import as_generator


def pearson(sample: PairedSample) -> float | None:
    """Sample correlation coefficient with (n-1)-normalized moments."""
    n = sample.n
    if n < 2:
        raise ValueError(f"at least 2 observations are required, got {n}")
    dx = sample.x - sample.x.mean()
    dy = sample.y - sample.y.mean()
    sxx = float(dx @ dx) / (n - 1)
    syy = float(dy @ dy) / (n - 1)
    if sxx == 0.0 or syy == 0.0:
        return None
    cov = float(dx @ dy) / (n - 1)
    r = cov / (np.sqrt(sxx) * np.sqrt(syy))
    return float(min(1.0, max(-1.0, r)))


def has_ties(values) -> bool:
    v = np.asarray(values)
    return np.unique(v).size != v.size


def ranks_descending(values) -> np.ndarray:
    """Rank 1 for the largest value, n for the smallest. Ties are rejected."""
    v = np.asarray(values, dtype=float)
    if has_ties(v):
        raise ValueError("ranks_descending needs distinct values; jitter ties first")
    order = np.argsort(-v, kind="stable")
    ranks = np.empty(v.size, dtype=np.int64)
    ranks[order] = np.arange(1, v.size + 1)
    return ranks


def _jitter_if_tied(values, rng) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if has_ties(v):
        v = v + rng.random(v.size)
    return v


def spearman(sample: PairedSample, seed=None) -> float:
    """Spearman's rho via 1 - 6 sum(l_i^2) / (n^3 - n).

    Ties in either coordinate are broken by adding independent Uniform(0, 1)
    noise to every value of that coordinate; ``seed`` feeds that noise and is
    only required when ties are present.
    """
    n = sample.n
    if n < 2:
        raise ValueError(f"at least 2 observations are required, got {n}")
    x, y = sample.x, sample.y
    if has_ties(x) or has_ties(y):
        if seed is None:
            raise ValueError("sample has ties; a seed is needed for the tie-breaking jitter")
        rng = as_generator(seed)
        x = _jitter_if_tied(x, rng)
        y = _jitter_if_tied(y, rng)
    diff = (ranks_descending(x) - ranks_descending(y)).astype(float)
    ssq = float(diff @ diff)
    nf = float(n)
    return 1.0 - 6.0 * ssq / (nf**3 - nf)


def _degree_sums(graph):
    deg = graph.degrees
    ends = graph.edges
    n_directed = 2 * int(ends.shape[0])
    # Python ints keep the differences below exact for large graphs.
    sum_d2 = int(np.sum(deg * deg))
    sum_d3 = int(np.sum(deg * deg * deg))
    sum_cross = 2 * int(np.sum(deg[ends[:, 0]] * deg[ends[:, 1]]))
    return n_directed, sum_d2, sum_d3, sum_cross


def graph_assortativity(graph) -> float | None:
    """Degree assortativity over directed edges (each undirected edge counted twice)."""
    if graph.n_edges == 0:
        raise ValueError("graph has no edges")
    n_directed, sum_d2, sum_d3, sum_cross = _degree_sums(graph)
    num = n_directed * sum_cross - sum_d2 * sum_d2
    den = n_directed * sum_d3 - sum_d2 * sum_d2
    if den == 0:
        return None
    return num / den


def assortativity_lower_bound(graph) -> float | None:
    """The assortativity with the non-negative cross-product term dropped."""
    if graph.n_edges == 0:
        raise ValueError("graph has no edges")
    n_directed, sum_d2, sum_d3, _ = _degree_sums(graph)
    den = n_directed * sum_d3 - sum_d2 * sum_d2
    if den == 0:
        return None
    return -(sum_d2 * sum_d2) / den


def edge_degree_sample(graph, seed) -> PairedSample:
    """One jittered (X, Y) observation per undirected edge, randomly oriented."""
    rng = as_generator(seed)
    deg = graph.degrees.astype(float)
    a = deg[graph.edges[:, 0]]
    b = deg[graph.edges[:, 1]]
    flip = rng.integers(0, 2, size=a.size).astype(bool)
    x = np.where(flip, b, a) + rng.random(a.size)
    y = np.where(flip, a, b) + rng.random(a.size)
    return PairedSample(x, y)


def graph_spearman(graph, seed) -> float:
    if graph.n_edges < 2:
        raise ValueError(f"rank correlation needs at least 2 edges, got {graph.n_edges}")
    rng = as_generator(seed)
    return spearman(edge_degree_sample(graph, rng), rng)
