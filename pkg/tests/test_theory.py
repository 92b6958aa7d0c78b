import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heavytail.theory import (
    MomentTriple,
    bipartite_limit_interval,
    intermediate_cm_rho_limit,
    mixture_rho_limit,
    pareto_moments,
    support_lower_bound,
)


def min_cosine_by_enumeration(alpha, beta):
    best = math.inf
    m = len(alpha)
    for size in range(2, m + 1):
        for subset in itertools.combinations(range(m), size):
            num = sum(alpha[j] * beta[j] for j in subset)
            na = sum(alpha[j] ** 2 for j in subset)
            nb = sum(beta[j] ** 2 for j in subset)
            if na > 0 and nb > 0:
                best = min(best, num / math.sqrt(na * nb))
    return best


def test_support_bound_examples():
    assert support_lower_bound((0.5, 0.5, 0), (0, 0.5, 0.5)) == 0.0
    assert support_lower_bound((1 / 2, 1 / 3, 1 / 6), (1 / 6, 1 / 3, 1 / 2)) == pytest.approx(0.6, abs=1e-15)
    assert support_lower_bound((1, 1), (1, 1)) == 1.0
    assert support_lower_bound((0.3, 0.2, 0.5), (0.3, 0.2, 0.5)) == 1.0


def test_support_bound_rejects_mixed_signs_and_large_m():
    with pytest.raises(ValueError):
        support_lower_bound((0.5, -1 / 3, 1 / 6), (1 / 6, 1 / 2, -1 / 3))
    with pytest.raises(ValueError):
        support_lower_bound([1.0] * 21, [1.0] * 21)
    with pytest.raises(ValueError):
        support_lower_bound((1.0,), (1.0,))


coefficient = st.one_of(st.just(0.0), st.floats(1e-3, 10))
nonneg_vectors = st.integers(2, 7).flatmap(
    lambda m: st.tuples(
        st.lists(coefficient, min_size=m, max_size=m),
        st.lists(coefficient, min_size=m, max_size=m),
    )
).filter(lambda ab: min_cosine_by_enumeration(*ab) < math.inf)


@settings(max_examples=200, deadline=None)
@given(nonneg_vectors)
def test_support_bound_matches_enumeration(ab):
    alpha, beta = ab
    got = support_lower_bound(alpha, beta)
    assert got == pytest.approx(min(min_cosine_by_enumeration(alpha, beta), 1.0), abs=1e-12)
    assert 0.0 <= got <= 1.0


@settings(max_examples=200, deadline=None)
@given(nonneg_vectors, st.floats(0.01, 100), st.integers(-10, 10))
def test_support_bound_scale_invariance(ab, c, k):
    alpha, beta = ab
    base = support_lower_bound(alpha, beta)
    assert support_lower_bound([c * v for v in alpha], beta) == pytest.approx(base, abs=1e-12)
    # powers of two scale without rounding
    assert support_lower_bound(alpha, [2.0**k * v for v in beta]) == base


def test_support_bound_twenty_dims():
    rng = np.random.default_rng(0)
    alpha, beta = rng.random(20), rng.random(20)
    assert 0 <= support_lower_bound(alpha, beta) <= 1


@pytest.mark.parametrize(
    "mean, var, expected",
    [
        (1.0, 0.0, -1.0),
        (pareto_moments(3, 1), pareto_moments(3, 2) - pareto_moments(3, 1) ** 2, -0.6),
        (pareto_moments(4, 1), pareto_moments(4, 2) - pareto_moments(4, 1) ** 2, -0.8),
    ],
)
def test_mixture_limit(mean, var, expected):
    assert mixture_rho_limit(mean, var) == pytest.approx(expected, abs=1e-14)


def test_mixture_limit_validation():
    with pytest.raises(ValueError):
        mixture_rho_limit(1.0, -0.1)
    with pytest.raises(ValueError):
        mixture_rho_limit(0.0, 1.0)


@settings(max_examples=200)
@given(st.floats(1e-3, 1e3), st.floats(0, 1e6))
def test_mixture_limit_range(mean, var):
    assert -1.0 <= mixture_rho_limit(mean, var) < 0.0


def test_intermediate_limit_examples():
    assert intermediate_cm_rho_limit(MomentTriple(2, 4, 8)) is None
    assert intermediate_cm_rho_limit(MomentTriple(3, 9, 27)) == pytest.approx(-1.0, abs=1e-14)
    # degrees 1 or 3 with probability 1/2 each
    assert intermediate_cm_rho_limit(MomentTriple(2, 5, 14)) == pytest.approx(-1 / 7, abs=1e-14)


def test_moment_triple_consistency():
    with pytest.raises(ValueError):
        MomentTriple(2, 3, 8)
    with pytest.raises(ValueError):
        MomentTriple(1, 2, 3)
    with pytest.raises(ValueError):
        MomentTriple(1, math.inf, 5)


def test_infinite_third_moment_gives_zero_limit():
    assert intermediate_cm_rho_limit(MomentTriple.of_pareto_degrees(2.5)) == 0.0


def _discrete_law_moments(support, probs):
    support = np.asarray(support, float)
    probs = np.asarray(probs, float) / np.sum(probs)
    return MomentTriple(*(float(np.sum(probs * support**p)) for p in (1, 2, 3)))


@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.integers(1, 50), min_size=2, max_size=6, unique=True),
    st.lists(st.floats(0.01, 1), min_size=6, max_size=6),
)
def test_intermediate_limit_is_negative(support, weights):
    m = _discrete_law_moments(support, weights[: len(support)])
    value = intermediate_cm_rho_limit(m)
    assert value is not None
    assert value < 0


def test_bipartite_interval():
    assert bipartite_limit_interval(1) == (1.0, 1.0)
    assert bipartite_limit_interval(2) == (0.8, 1.0)
    assert bipartite_limit_interval(3) == pytest.approx((0.6, 1.0))
    with pytest.raises(ValueError):
        bipartite_limit_interval(0.5)


@pytest.mark.parametrize("gamma, p, expected", [(3, 1, 1.5), (3, 2, 3.0), (2, 2, math.inf), (1.1, 2, math.inf)])
def test_continuous_pareto_moments(gamma, p, expected):
    assert pareto_moments(gamma, p) == expected


def floor_moment_by_series(gamma, p, terms=2_000_000):
    """Partial sum of k^p P(D = k) plus an integral estimate of the tail."""
    k = np.arange(1, terms + 1, dtype=float)
    pmf = k**-gamma - (k + 1) ** -gamma
    head = float(np.sum(k**p * pmf))
    # k^p P(D=k) ~ gamma k^(p-gamma-1); integrate from terms + 1/2
    tail = gamma * (terms + 0.5) ** (p - gamma) / (gamma - p)
    return head + tail


@pytest.mark.parametrize("gamma, p", [(2.0, 1), (3.5, 1), (3.5, 2), (3.5, 3), (5.0, 3), (4.2, 2)])
def test_integer_moments_against_series(gamma, p):
    assert pareto_moments(gamma, p, integer=True) == pytest.approx(floor_moment_by_series(gamma, p), rel=1e-8)


def test_integer_first_moment_is_zeta():
    assert pareto_moments(2.0, 1, integer=True) == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert pareto_moments(2.0, 2, integer=True) == math.inf
