"""Shared reference oracles and draw helpers.

Every oracle here is structurally independent of the package: coefficients
come from explicit Pochhammer products and math.factorial, sums go through
math.fsum (exact up to one final rounding), and nothing reuses the package's
ratio recurrences or Kahan loops.
"""

from __future__ import annotations

import math
import random

import pytest

from besselgeom import BesselParams


def ref_coeff(p: float, b: float, c: float, k: int) -> float:
    """a_k = (-c)^(k-1) / ((q)_(k-1) (k-1)!) by direct product."""
    q = p + (b + 1.0) / 2.0
    poch = 1.0
    for j in range(k - 1):
        poch *= q + j
    return (-c) ** (k - 1) / (poch * math.factorial(k - 1))


def _fsum_complex(terms: list[complex]) -> complex:
    return complex(
        math.fsum(t.real for t in terms),
        math.fsum(t.imag for t in terms),
    )


def ref_u(p: float, b: float, c: float, z: complex, n: int = 60) -> complex:
    terms = [ref_coeff(p, b, c, k) * z**k for k in range(1, n + 1)]
    return _fsum_complex(terms)


def ref_u_derivs(
    p: float, b: float, c: float, z: complex, n: int = 60
) -> tuple[complex, complex, complex]:
    a = [ref_coeff(p, b, c, k) for k in range(1, n + 1)]
    u = _fsum_complex([ak * z**k for k, ak in enumerate(a, start=1)])
    up = _fsum_complex([k * ak * z ** (k - 1) for k, ak in enumerate(a, start=1)])
    upp = _fsum_complex(
        [k * (k - 1) * ak * z ** (k - 2) for k, ak in enumerate(a, start=1) if k >= 2]
    )
    return u, up, upp


def ref_weighted_sum(
    p: float, b: float, c: float, alpha: float, beta: float,
    convex: bool, n: int = 80,
) -> float:
    """Reference for the coefficient criteria, on |a_k| with fsum."""
    terms = []
    for k in range(2, n + 1):
        w = (k - 1.0) + beta * (k + 1.0 - 2.0 * alpha)
        if convex:
            w *= k
        terms.append(w * abs(ref_coeff(p, b, c, k)))
    return math.fsum(terms)


def draw_chain_inputs(rng: random.Random) -> tuple[BesselParams, float, float]:
    """Random draw matching the soundness-property ranges (b = 1, so q = p + 1)."""
    q = rng.uniform(0.05, 20.0)
    c = -rng.uniform(0.01, 5.0)
    alpha = rng.uniform(0.0, 0.99)
    beta = rng.uniform(0.001, 1.0)
    return BesselParams(q - 1.0, 1.0, c), alpha, beta


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260814)
