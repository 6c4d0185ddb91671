"""Shared parameter-draw helpers for the test suite.

Draws are constructive where a rejection loop would be slow: case-I
parameters pick gamma so that gamma*(A-B) lands within distance < 1 of B,
and the identity-hypothesis draws place gamma*(A-B) at a prescribed
distance from B*(m-2).  Case-II draws use rejection from a biased region.
"""

import numpy as np
import pytest

from schlicht import ClassParams, classify_case


def draw_valid_params(rng) -> ClassParams:
    b = float(rng.uniform(-1.0, 0.99))
    a = float(rng.uniform(b + 0.01, 1.0))
    lam = float(rng.uniform(0.0, 1.0))
    while True:
        gamma = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(gamma) > 1e-3:
            return ClassParams(gamma, lam, a, b)


def draw_case_ii_params(rng, n: int, max_tries: int = 10_000) -> ClassParams:
    """Parameters classified II at index n (margins nonnegative through n-1)."""
    for _ in range(max_tries):
        b = float(rng.uniform(-1.0, -0.7))
        a = float(rng.uniform(max(b + 0.5, 0.3), 1.0))
        rho = float(rng.uniform(0.5, 2.0))
        phi = float(rng.uniform(-0.6, 0.6))
        lam = float(rng.uniform(0.0, 1.0))
        p = ClassParams(rho * np.exp(1j * phi), lam, a, b)
        if classify_case(p, n).case_tag == "II":
            return p
    raise AssertionError("case-II rejection sampling exhausted")


def draw_case_i_params(rng) -> ClassParams:
    """Parameters with a strictly negative first margin (case I at every n)."""
    while True:
        b = float(rng.uniform(-1.0, 0.5))
        a = float(rng.uniform(b + 0.2, 1.0))
        delta = float(rng.uniform(0.05, 0.95)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        gamma = (b + delta) / (a - b)
        if abs(gamma) > 1e-3:
            lam = float(rng.uniform(0.0, 1.0))
            return ClassParams(gamma, lam, a, b)


def draw_identity_params(rng, m_max: int = 12):
    """(params, m) satisfying |gamma*(A-B) - B*(m-2)| >= m-2 by construction."""
    m = int(rng.integers(2, m_max + 1))
    b = float(rng.uniform(-1.0, 0.9))
    a = float(rng.uniform(b + 0.1, 1.0))
    radius = (m - 2) + float(rng.uniform(0.0, 3.0))
    w = radius * np.exp(1j * rng.uniform(0, 2 * np.pi))
    gamma = (b * (m - 2) + w) / (a - b)
    if abs(gamma) <= 1e-6:
        gamma = 1.0
    lam = float(rng.uniform(0.0, 1.0))
    return ClassParams(gamma, lam, a, b), m


def draw_spiral_case_ii(rng, max_tries: int = 10_000):
    """(beta, a, b, n) whose reduction classifies II at n."""
    from schlicht import spiral_gamma

    for _ in range(max_tries):
        beta = float(rng.uniform(-0.9, 0.9))
        b = float(rng.uniform(-1.0, -0.6))
        a = float(rng.uniform(max(b + 0.5, 0.4), 1.0))
        n = int(rng.integers(2, 13))
        p = ClassParams(spiral_gamma(beta), 0.0, a, b)
        if classify_case(p, n).case_tag == "II":
            return beta, a, b, n
    raise AssertionError("spiral case-II rejection sampling exhausted")


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
