"""Closed-form limit values and bounds used to cross-check simulations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import comb, zeta

MAX_SUBSET_DIM = 20


def support_lower_bound(alpha, beta) -> float:
    """Minimum over index subsets S with |S| >= 2 of the cosine between
    alpha and beta restricted to S.

    Subsets on which alpha or beta vanishes identically have no defined
    cosine and are skipped.
    """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    m = alpha.size
    if beta.size != m:
        raise ValueError(f"alpha and beta must have equal length, got {m} and {beta.size}")
    if m < 2:
        raise ValueError("at least two coefficients are needed")
    if m > MAX_SUBSET_DIM:
        raise ValueError(f"subset enumeration is capped at m={MAX_SUBSET_DIM}, got m={m}")
    if np.any(alpha * beta < 0):
        raise ValueError("mixed-sign products alpha_k * beta_k: the limit is supported on all of (-1, 1)")

    cross, a2, b2 = alpha * beta, alpha * alpha, beta * beta
    best = math.inf
    bit = 1 << np.arange(m)
    chunk = 1 << 16
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m))
        member = (masks[:, None] & bit) != 0
        member = member[member.sum(axis=1) >= 2].astype(float)
        if not member.size:
            continue
        num = member @ cross
        na = member @ a2
        nb = member @ b2
        ok = (na > 0) & (nb > 0)
        if not ok.any():
            continue
        # sqrt(na * nb) keeps identical vectors at exactly 1
        best = min(best, float(np.min(num[ok] / np.sqrt(na[ok] * nb[ok]))))
    if best == math.inf:
        raise ValueError("no subset of size >= 2 has non-zero alpha and beta")
    return min(best, 1.0)


def mixture_rho_limit(mean_u: float, var_u: float) -> float:
    """Limit of the sample correlation for (2UI, 2U(1-I)) when Var(U) is finite."""
    if not mean_u > 0:
        raise ValueError(f"mean_u must be positive, got {mean_u}")
    if var_u < 0:
        raise ValueError(f"var_u must be non-negative, got {var_u}")
    if math.isinf(var_u):
        return 0.0
    return -(mean_u**2) / (2.0 * var_u + mean_u**2)


@dataclass(frozen=True)
class MomentTriple:
    """E[D], E[D^2], E[D^3] of a positive degree law; mu3 may be infinite."""

    mu1: float
    mu2: float
    mu3: float

    def __post_init__(self):
        if not (self.mu1 > 0 and self.mu2 > 0 and self.mu3 > 0):
            raise ValueError("moments must be positive")
        if math.isinf(self.mu1):
            raise ValueError("mu1 must be finite")
        tol = 1e-12
        if self.mu2 < self.mu1**2 * (1 - tol):
            raise ValueError(f"inconsistent moments: mu2={self.mu2} < mu1^2={self.mu1**2}")
        if math.isinf(self.mu2) and not math.isinf(self.mu3):
            raise ValueError("inconsistent moments: infinite mu2 with finite mu3")
        if self.mu3 * self.mu1 < self.mu2**2 * (1 - tol):
            raise ValueError(f"inconsistent moments: mu3*mu1={self.mu3 * self.mu1} < mu2^2={self.mu2**2}")

    @classmethod
    def of_pareto_degrees(cls, gamma: float) -> "MomentTriple":
        """Moments of the integer law P(D >= k) = k**-gamma."""
        return cls(*(pareto_moments(gamma, p, integer=True) for p in (1, 2, 3)))


def intermediate_cm_rho_limit(m: MomentTriple) -> float | None:
    """Limiting assortativity of the configuration model with every edge
    subdivided by a degree-2 vertex.

    Returns None for the 0/0 degree-2 regular case and 0.0 when the third
    moment is infinite.
    """
    if math.isinf(m.mu3):
        return 0.0
    h = 1.0 + m.mu2 / (2.0 * m.mu1)
    num = 2.0 * m.mu2 / m.mu1 - h * h
    den = 2.0 + m.mu3 / (2.0 * m.mu1) - h * h
    if abs(den) <= 1e-12 * (2.0 + m.mu3 / (2.0 * m.mu1)):
        return None
    return num / den


def bipartite_limit_interval(a: float) -> tuple[float, float]:
    """Range (2a / (1 + a^2), 1) of the limiting bipartite-collection assortativity."""
    if a < 1:
        raise ValueError(f"a must be at least 1, got {a}")
    return 2.0 * a / (1.0 + a * a), 1.0


def pareto_moments(gamma: float, p: int, integer: bool = False) -> float:
    """E[U^p] for P(U > x) = x**-gamma, or E[D^p] for D = floor(U) if ``integer``.

    Returns ``math.inf`` when gamma <= p. The integer moment uses
    E[D^p] = sum_k (k^p - (k-1)^p) k**-gamma, expanded into Riemann zeta
    values.
    """
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if p < 1 or int(p) != p:
        raise ValueError(f"p must be a positive integer, got {p}")
    p = int(p)
    if gamma <= p:
        return math.inf
    if not integer:
        return gamma / (gamma - p)
    # k^p - (k-1)^p = sum_{j<p} C(p, j) (-1)^(p-1-j) k^j
    total = 0.0
    for j in range(p):
        total += comb(p, j, exact=True) * (-1) ** (p - 1 - j) * float(zeta(gamma - j))
    return total
