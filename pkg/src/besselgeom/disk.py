"""Direct verification of the class inequalities by unit-disk sampling.

The defining inequalities are, for w = z u'(z) / u(z),

    starlike:  | (w - 1) / (w + 1 - 2 alpha) |  <  beta,

and, for v = z u''(z) / u'(z),

    convex:    | v / (v + 2 (1 - alpha)) |  <  beta,

required at every z in the open unit disk.  This module samples the
quotients on concentric rings and reports the empirical maximum, the count
of sample points at or above beta, and the count of points skipped because
a denominator fell below the numerical guard.  At z = 0 both quotients have
removable limit 0 (w -> 1 and v -> 0 by normalization), so the origin is
excluded from every grid.

A sampled maximum below beta is evidence consistent with membership, never
a certificate; the sampled verdicts must not be read as proof.  The package
uses them as the ground-truth end of the implication chain: whenever a
coefficient criterion holds, sampling must find no violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bessel import BesselParams, eval_u_derivatives
from .criteria import ClassSpec
from .errors import DegenerateError, DomainError

GUARD = 1e-14

DEFAULT_RADII: tuple[float, ...] = (
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999,
)
DEFAULT_ANGLES = 720


@dataclass(frozen=True)
class DiskGrid:
    """Concentric sampling rings: radii in (0, 1), equally spaced angles."""

    radii: tuple[float, ...] = DEFAULT_RADII
    angles_per_ring: int = DEFAULT_ANGLES

    def __post_init__(self) -> None:
        if not self.radii:
            raise DomainError("grid needs at least one radius")
        for r in self.radii:
            if not (0.0 < r < 1.0):
                raise DomainError(f"radii must lie in (0, 1), got {r!r}")
        if self.angles_per_ring < 1:
            raise DomainError(
                f"angles_per_ring must be >= 1, got {self.angles_per_ring!r}"
            )

    def points(self) -> np.ndarray:
        """All sample points as one complex array, ring by ring."""
        theta = np.arange(self.angles_per_ring) * (2.0 * np.pi / self.angles_per_ring)
        ring = np.exp(1j * theta)
        return np.concatenate([r * ring for r in self.radii])


DEFAULT_GRID = DiskGrid()


class QuotientKind(Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


@dataclass(frozen=True)
class SupEstimate:
    """Empirical supremum of a quotient over a grid."""

    max_quotient: float
    argmax_z: complex
    violations: int
    degenerate_points: int


def _check_z(z: complex) -> complex:
    z = complex(z)
    if not 0.0 < abs(z) < 1.0:
        raise DomainError(f"z must satisfy 0 < |z| < 1, got |z| = {abs(z)!r}")
    return z


def starlike_quotient(params: BesselParams, z: complex, alpha: float) -> float:
    """|(w - 1) / (w + 1 - 2 alpha)| with w = z u'(z) / u(z), for 0 < |z| < 1."""
    z = _check_z(z)
    u, up, _ = eval_u_derivatives(params, z)
    if abs(u.value) <= GUARD:
        raise DegenerateError(f"|u(z)| = {abs(u.value)!r} is below the guard at z = {z!r}")
    w = z * up.value / u.value
    den = w + (1.0 - 2.0 * alpha)
    if abs(den) <= GUARD:
        raise DegenerateError(f"|w + 1 - 2 alpha| = {abs(den)!r} is below the guard")
    return abs((w - 1.0) / den)


def convex_quotient(params: BesselParams, z: complex, alpha: float) -> float:
    """|v / (v + 2 (1 - alpha))| with v = z u''(z) / u'(z), for 0 < |z| < 1."""
    z = _check_z(z)
    _, up, upp = eval_u_derivatives(params, z)
    if abs(up.value) <= GUARD:
        raise DegenerateError(f"|u'(z)| = {abs(up.value)!r} is below the guard at z = {z!r}")
    v = z * upp.value / up.value
    den = v + 2.0 * (1.0 - alpha)
    if abs(den) <= GUARD:
        raise DegenerateError(f"|v + 2(1 - alpha)| = {abs(den)!r} is below the guard")
    return abs(v / den)


def _coefficient_array(params: BesselParams, rmax: float) -> np.ndarray:
    """Coefficients a_1..a_K with K chosen so the truncation is negligible.

    K satisfies the same geometric-majorant logic as the scalar evaluator:
    the term ratio at radius rmax (including the second-derivative weight)
    is at most 1/2 and the first discarded u'' term is below 1e-16.
    """
    q, c = params.q, params.c
    coeffs = [1.0]
    k = 1
    while True:
        nxt = coeffs[-1] * (-c) / ((q + k - 1.0) * k)
        coeffs.append(nxt)
        k += 1
        if k >= 16 and q + k > 0.0:
            ratio = abs(c) * rmax / ((q + k) * (k + 1.0)) * (k + 2.0) / k
            lead = (k + 1.0) * k * abs(nxt) * rmax ** max(k - 2, 0)
            if ratio <= 0.5 and lead / (1.0 - ratio) < 1e-16:
                return np.asarray(coeffs)
        if k > 10_000:  # same hard cap as the scalar evaluator
            return np.asarray(coeffs)


def _eval_on_grid(params: BesselParams, zs: np.ndarray):
    """(u, u', u'') on an array of nonzero points, by Horner on shared coefficients."""
    a = _coefficient_array(params, float(np.max(np.abs(zs))))
    ks = np.arange(1, len(a) + 1, dtype=float)
    u = np.zeros_like(zs)
    up = np.zeros_like(zs)
    us = np.zeros_like(zs)
    for ak, k in zip(a[::-1], ks[::-1]):
        u = u * zs + ak
        up = up * zs + k * ak
        us = us * zs + k * (k - 1.0) * ak
    return u * zs, up, us / zs


def sup_estimate(
    params: BesselParams,
    cls: ClassSpec,
    which: QuotientKind,
    grid: DiskGrid = DEFAULT_GRID,
) -> SupEstimate:
    """Empirical sup of the chosen quotient; violations counted against cls.beta.

    Guard-tripped points are excluded from the maximum and the violation
    count and reported in degenerate_points instead.
    """
    zs = grid.points()
    u, up, us = _eval_on_grid(params, zs)
    with np.errstate(all="ignore"):
        if which is QuotientKind.STARLIKE:
            first = u
            w = zs * up / u
            den = w + (1.0 - 2.0 * cls.alpha)
            quot = np.abs((w - 1.0) / den)
        else:
            first = up
            w = zs * us / up
            den = w + 2.0 * (1.0 - cls.alpha)
            quot = np.abs(w / den)
        valid = (np.abs(first) > GUARD) & (np.abs(den) > GUARD)
    degenerate = int(zs.size - np.count_nonzero(valid))
    if not np.any(valid):
        return SupEstimate(0.0, 0j, 0, degenerate)
    masked = np.where(valid, quot, -1.0)
    idx = int(np.argmax(masked))
    violations = int(np.count_nonzero(masked[valid] >= cls.beta))
    return SupEstimate(float(masked[idx]), complex(zs[idx]), violations, degenerate)
