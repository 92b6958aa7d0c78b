"""Seeded RNG streams and inverse-CDF samplers for heavy-tailed laws."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Seed:
    """A reproducible RNG stream keyed by ``(master, stream_index)``."""

    master: int
    stream_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master < 2**64:
            raise ValueError(f"master seed must be a 64-bit unsigned integer, got {self.master}")
        if self.stream_index < 0:
            raise ValueError(f"stream_index must be non-negative, got {self.stream_index}")

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.master, spawn_key=(self.stream_index,))
        return np.random.Generator(np.random.PCG64(ss))


def as_generator(seed) -> np.random.Generator:
    """Accept a Seed, a Generator (used as-is) or a plain int master seed."""
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, Seed):
        return seed.generator()
    if isinstance(seed, (int, np.integer)):
        return Seed(int(seed)).generator()
    raise TypeError(f"cannot build a random generator from {seed!r}")


def _unit_interval(rng: np.random.Generator, n: int) -> np.ndarray:
    # Generator.random() is on [0, 1); flip it to (0, 1] so V^(-1/gamma) stays finite.
    return 1.0 - rng.random(n)


@dataclass(frozen=True)
class ParetoLaw:
    """Pure Pareto law with P(U > x) = x**-gamma on [1, inf)."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    def survival(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x < 1.0, 1.0, np.maximum(x, 1.0) ** -self.gamma)

    def cdf(self, x):
        return 1.0 - self.survival(x)

    def quantile_from_uniform(self, v):
        """Map V in (0, 1] to U = V**(-1/gamma)."""
        return np.asarray(v, dtype=float) ** (-1.0 / self.gamma)


@dataclass(frozen=True)
class GeneralizedParetoLaw:
    """P(U > x) = ((shift + x) / scale)**-gamma for x > 1, with P(U > 1) = 1."""

    shift: float = 1.8
    scale: float = 2.8
    gamma: float = 2.8

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if not math.isclose((self.shift + 1.0) / self.scale, 1.0, rel_tol=1e-12):
            raise ValueError(
                f"(shift + 1) / scale must equal 1 so that the support starts at 1; "
                f"got shift={self.shift}, scale={self.scale}"
            )

    def survival(self, x):
        x = np.asarray(x, dtype=float)
        tail = ((self.shift + np.maximum(x, 1.0)) / self.scale) ** -self.gamma
        return np.where(x < 1.0, 1.0, tail)

    def cdf(self, x):
        return 1.0 - self.survival(x)

    def quantile_from_uniform(self, v):
        return self.scale * np.asarray(v, dtype=float) ** (-1.0 / self.gamma) - self.shift


def sample_pareto(law: ParetoLaw, n: int, seed) -> np.ndarray:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = as_generator(seed)
    return law.quantile_from_uniform(_unit_interval(rng, n))


def sample_generalized_pareto(law: GeneralizedParetoLaw, n: int, seed) -> np.ndarray:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = as_generator(seed)
    # max() guards the x = 1 boundary against a one-ulp undershoot
    return np.maximum(law.quantile_from_uniform(_unit_interval(rng, n)), 1.0)


def sample_law(law, n: int, seed) -> np.ndarray:
    """Draw from either supported law."""
    if isinstance(law, GeneralizedParetoLaw):
        return sample_generalized_pareto(law, n, seed)
    return sample_pareto(law, n, seed)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.degrees, dtype=np.int64)
        if d.ndim != 1 or d.size == 0:
            raise ValueError("degree sequence must be a non-empty 1-d array")
        if np.any(d < 1):
            raise ValueError("every degree must be at least 1")
        if int(d.sum()) % 2:
            raise ValueError(f"total degree must be even, got {int(d.sum())}")
        object.__setattr__(self, "degrees", d)

    @property
    def n(self) -> int:
        return int(self.degrees.size)

    @property
    def total(self) -> int:
        return int(self.degrees.sum())


def degrees_from_draws(u, seed) -> DegreeSequence:
    """Floor continuous draws to integer degrees, fixing an odd total.

    An odd total is repaired by adding 1 to a uniformly chosen vertex.
    """
    d = np.floor(np.asarray(u, dtype=float)).astype(np.int64)
    if int(d.sum()) % 2:
        rng = as_generator(seed)
        d[rng.integers(d.size)] += 1
    return DegreeSequence(d)


def sample_degree_sequence(gamma_tail: float, n: int, seed) -> DegreeSequence:
    """I.i.d. integer degrees with P(D >= k) = k**-gamma_tail.

    ``gamma_tail`` is the tail exponent of the degree survival function. A
    degree law quoted by its density exponent (p_k ~ k**-(gamma_tail + 1))
    must be converted first: P(D >= x) = x**-2 means ``gamma_tail=2``.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    rng = as_generator(seed)
    u = sample_pareto(ParetoLaw(gamma_tail), n, rng)
    return degrees_from_draws(u, rng)


def stable_norming_constant(gamma: float, n: int) -> float:
    """Norming constant a_n = n**(2/gamma) for sums of squared Pareto draws."""
    if not 0 < gamma < 2:
        raise ValueError(f"gamma must lie in (0, 2) for the squared draws to be in a stable domain, got {gamma}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return float(n) ** (2.0 / gamma)
