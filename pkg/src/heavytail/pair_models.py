"""Synthetic (X, Y) dependence models built from i.i.d. heavy-tailed draws."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .sampling import ParetoLaw, as_generator, sample_law


@dataclass(frozen=True)
class PairedSample:
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 1:
            raise ValueError(f"x and y must be 1-d arrays of equal length, got {x.shape} and {y.shape}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return int(self.x.size)

    @classmethod
    def from_pairs(cls, pairs) -> "PairedSample":
        arr = np.asarray(pairs, dtype=float).reshape(-1, 2)
        return cls(arr[:, 0], arr[:, 1])


@dataclass(frozen=True)
class LinearModel:
    """X = sum_j alpha_j U_j and Y = sum_j beta_j U_j over one shared U-vector."""

    alpha: tuple
    beta: tuple
    base_law: object = field(default_factory=lambda: ParetoLaw(1.1))

    def __post_init__(self):
        alpha = tuple(float(a) for a in self.alpha)
        beta = tuple(float(b) for b in self.beta)
        if len(alpha) != len(beta):
            raise ValueError(f"alpha and beta must have equal length, got {len(alpha)} and {len(beta)}")
        if not alpha:
            raise ValueError("at least one coefficient is required")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def m(self) -> int:
        return len(self.alpha)


def sample_linear_pairs(model: LinearModel, n: int, seed) -> PairedSample:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = as_generator(seed)
    u = sample_law(model.base_law, n * model.m, rng).reshape(n, model.m)
    return PairedSample(u @ np.asarray(model.alpha), u @ np.asarray(model.beta))


def sample_mixture_pairs(base_law, n: int, seed) -> PairedSample:
    """(X, Y) = (2U, 0) or (0, 2U) with probability 1/2 each."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = as_generator(seed)
    u = sample_law(base_law, n, rng)
    coin = rng.integers(0, 2, size=n)
    return PairedSample(2.0 * u * coin, 2.0 * u * (1 - coin))
