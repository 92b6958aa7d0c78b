"""Replication harness: E_N, sigma_N and empirical CDFs of estimator values."""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import estimators as est
from . import graphs
from .pair_models import LinearModel, sample_linear_pairs, sample_mixture_pairs
from .sampling import GeneralizedParetoLaw, ParetoLaw, Seed, sample_degree_sequence

log = logging.getLogger(__name__)

PAIR_MODELS = ("linear", "mixture")
GRAPH_MODELS = ("cm-raw", "cm-erased", "cm-intermediate", "pam", "bipartite")
MODELS = PAIR_MODELS + GRAPH_MODELS
ESTIMATORS = ("pearson", "spearman")

DEFAULT_GAMMA = {
    "linear": 1.1,
    "mixture": 1.1,
    # tail exponent of the degree law, P(D >= x) = x**-2
    "cm-raw": 2.0,
    "cm-erased": 2.0,
    "cm-intermediate": 2.0,
    "bipartite": 2.8,
}
DEFAULT_ALPHA = (0.5, 0.5, 0.0)
DEFAULT_BETA = (0.0, 0.5, 0.5)

RESULTS_HEADER = ["model", "estimator", "n", "N", "seed", "mean", "std", "n_undefined"]


class AllUndefinedError(RuntimeError):
    pass


@dataclass(frozen=True)
class ModelConfig:
    model: str
    n: int
    reps: int
    seed: int = 0
    gamma: float | None = None
    alpha: tuple = DEFAULT_ALPHA
    beta: tuple = DEFAULT_BETA
    a: float = 2.0
    b: float = 0.5

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.reps < 1:
            raise ValueError(f"reps must be at least 1, got {self.reps}")
        if self.model == "pam" and self.gamma is not None:
            raise ValueError("the preferential attachment model takes no gamma")
        object.__setattr__(self, "alpha", tuple(float(v) for v in self.alpha))
        object.__setattr__(self, "beta", tuple(float(v) for v in self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")

    @property
    def tail(self) -> float | None:
        return self.gamma if self.gamma is not None else DEFAULT_GAMMA.get(self.model)

    @property
    def is_graph(self) -> bool:
        return self.model in GRAPH_MODELS


def generate(config: ModelConfig, rng: np.random.Generator):
    """One model instance: a PairedSample for pair models, a Graph otherwise."""
    model, n = config.model, config.n
    if model == "linear":
        return sample_linear_pairs(LinearModel(config.alpha, config.beta, ParetoLaw(config.tail)), n, rng)
    if model == "mixture":
        return sample_mixture_pairs(ParetoLaw(config.tail), n, rng)
    if model.startswith("cm-"):
        g = graphs.configuration_model(sample_degree_sequence(config.tail, n, rng), rng)
        if model == "cm-erased":
            return graphs.erase_parallel_and_loops(g)
        if model == "cm-intermediate":
            return graphs.insert_intermediate_vertices(g)
        return g
    if model == "pam":
        return graphs.preferential_attachment(n, rng)
    law = GeneralizedParetoLaw(shift=1.8, scale=2.8, gamma=config.tail)
    return graphs.bipartite_collection(graphs.sample_bipartite_pairs(config.b, config.a, law, n, rng))


def apply_estimator(name: str, instance, rng: np.random.Generator) -> float | None:
    if isinstance(instance, graphs.Graph):
        if name == "pearson":
            return est.graph_assortativity(instance)
        return est.graph_spearman(instance, rng)
    if name == "pearson":
        return est.pearson(instance)
    return est.spearman(instance, rng)


def replicate(config: ModelConfig, index: int, estimators=ESTIMATORS) -> dict:
    """Run replication ``index`` on RNG stream (seed, index)."""
    rng = Seed(config.seed, index).generator()
    instance = generate(config, rng)
    return {name: apply_estimator(name, instance, rng) for name in estimators}


def _replicate_chunk(args):
    config, indices, estimators = args
    return [replicate(config, j, estimators) for j in indices]


@dataclass
class EstimateSummary:
    values: np.ndarray
    mean: float
    std: float
    n_undefined: int = 0
    raw: list = field(default_factory=list, repr=False)

    @property
    def n_defined(self) -> int:
        return int(self.values.size)

    @classmethod
    def from_values(cls, raw, label: str = "estimator") -> "EstimateSummary":
        defined = np.array([v for v in raw if v is not None], dtype=float)
        n_undefined = len(raw) - defined.size
        if defined.size == 0:
            raise AllUndefinedError(
                f"{label}: all {len(raw)} replications were undefined (zero-variance denominator, e.g. regular graphs)"
            )
        mean = float(np.sum(defined) / defined.size)
        std = float(np.sqrt(np.sum((defined - mean) ** 2) / (defined.size - 1))) if defined.size > 1 else 0.0
        return cls(defined, mean, std, n_undefined, list(raw))


def run_estimators(config: ModelConfig, estimators=ESTIMATORS, jobs: int = 1) -> dict:
    """Summaries for several estimators, applied to the same model instances."""
    estimators = tuple(estimators)
    for name in estimators:
        if name not in ESTIMATORS:
            raise ValueError(f"unknown estimator {name!r}; choose from {', '.join(ESTIMATORS)}")
    indices = list(range(config.reps))
    if jobs > 1 and config.reps > 1:
        chunks = [indices[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_replicate_chunk, [(config, c, estimators) for c in chunks]))
        results = [None] * config.reps
        for c, part in zip(chunks, parts):
            for j, r in zip(c, part):
                results[j] = r
    else:
        results = [replicate(config, j, estimators) for j in indices]
    out = {}
    for name in estimators:
        out[name] = EstimateSummary.from_values([r[name] for r in results], f"{config.model}/{name}")
        log.info("%s n=%d N=%d %s: mean=%.6g std=%.6g", config.model, config.n, config.reps,
                 name, out[name].mean, out[name].std)
    return out


def run_replications(config: ModelConfig, estimator: str, jobs: int = 1) -> EstimateSummary:
    return run_estimators(config, (estimator,), jobs)[estimator]


def empirical_cdf(values, grid=None) -> list[tuple[float, float]]:
    """Right-continuous empirical CDF sampled on ``grid`` (default: 201 points on [-1, 1])."""
    v = np.sort(np.asarray(values, dtype=float))
    if v.size == 0:
        raise ValueError("empirical_cdf needs at least one value")
    grid = np.linspace(-1.0, 1.0, 201) if grid is None else np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) < 0):
        raise ValueError("grid must be sorted ascending")
    counts = np.searchsorted(v, grid, side="right")
    return [(float(x), float(c) / v.size) for x, c in zip(grid, counts)]


def ks_distance(a, b) -> float:
    """Two-sample Kolmogorov-Smirnov sup distance between empirical CDFs."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be non-empty")
    points = np.concatenate([a, b])
    fa = np.searchsorted(a, points, side="right") / a.size
    fb = np.searchsorted(b, points, side="right") / b.size
    return float(np.max(np.abs(fa - fb)))


def fmt(x) -> str:
    """Six significant digits, or 'undefined'."""
    if x is None:
        return "undefined"
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def write_results_csv(path, config: ModelConfig, summaries: dict, delimiter: str = ",") -> None:
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        w.writerow(RESULTS_HEADER)
        for name, s in summaries.items():
            w.writerow([config.model, name, config.n, config.reps, config.seed,
                        fmt(s.mean), fmt(s.std), s.n_undefined])


def write_cdf_csv(path, cdf, delimiter: str = ",") -> None:
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        w.writerow(["x", "F"])
        for x, f in cdf:
            w.writerow([fmt(x), fmt(f)])


def read_cdf_csv(path) -> list[tuple[float, float]]:
    with open(Path(path), newline="") as fh:
        return [(float(r["x"]), float(r["F"])) for r in csv.DictReader(fh)]
