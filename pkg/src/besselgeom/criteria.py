"""Weighted coefficient sums deciding starlikeness and convexity.

For f(z) = z + sum_{k>=2} a_k z^k on the unit disk, membership in the
starlike class S*(alpha, beta) is guaranteed by

    sum_{k>=2} [k - 1 + beta (k + 1 - 2 alpha)] |a_k|  <=  2 beta (1 - alpha),

and membership in the convex class K(alpha, beta) by the same sum with an
extra factor k in the weight.  Here 0 <= alpha < 1 and 0 < beta <= 1.  The
two are dual: f is in K(alpha, beta) exactly when z f'(z) is in
S*(alpha, beta), and at the coefficient level the convex weight is the
starlike weight applied to the coefficients k a_k.

For the normalized Bessel-type series, |a_k| = |c|^(k-1) / ((q)_(k-1) (k-1)!)
decays factorially, so both sums are evaluated with the same rigorous
geometric-majorant truncation used by the series evaluator.  Reports carry a
tri-state status: a verdict is only HOLDS or FAILS when the tail bound
cannot flip it, and INDETERMINATE otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .bessel import MIN_TERMS, BesselParams, _kahan_step, eval_u_derivatives
from .errors import DomainError, NoConvergenceError

DEFAULT_EPS = 1e-12
MAX_TERMS = 10_000


@dataclass(frozen=True)
class ClassSpec:
    """Order alpha and type beta of the target class: 0 <= alpha < 1, 0 < beta <= 1."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha < 1.0):
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if not (math.isfinite(self.beta) and 0.0 < self.beta <= 1.0):
            raise DomainError(f"beta must lie in (0, 1], got {self.beta!r}")

    @property
    def threshold(self) -> float:
        """Right-hand side 2 beta (1 - alpha) of both coefficient criteria."""
        return 2.0 * self.beta * (1.0 - self.alpha)


class SumStatus(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SumReport:
    """Outcome of one weighted coefficient sum against its threshold.

    holds is the rigorous claim sum + tail_bound <= threshold; FAILS requires
    sum - tail_bound > threshold; anything else is INDETERMINATE.  Ties at
    sum == threshold count as HOLDS (the criteria are non-strict).
    """

    sum: float
    tail_bound: float
    threshold: float
    holds: bool
    margin: float
    status: SumStatus


def _report(total: float, tail: float, cls: ClassSpec) -> SumReport:
    thr = cls.threshold
    if total + tail <= thr:
        status = SumStatus.HOLDS
    elif total - tail > thr:
        status = SumStatus.FAILS
    else:
        status = SumStatus.INDETERMINATE
    return SumReport(
        sum=total,
        tail_bound=tail,
        threshold=thr,
        holds=status is SumStatus.HOLDS,
        margin=thr - total,
        status=status,
    )


def _weighted_sum(
    params: BesselParams,
    cls: ClassSpec,
    convex: bool,
    eps: float,
    as_printed: bool,
    max_terms: int,
) -> SumReport:
    """Sum_{k>=2} weight(k) m_k with m_k = |c|^(k-1) / ((q)_(k-1) (k-1)!).

    as_printed replaces |c|^(k-1) by (-c)^(k-1), reproducing the signed form
    some displays use; the two coincide for c < 0.  The stop rule mirrors the
    series evaluator: the weight ratios weight(k+1)/weight(k) decrease toward
    1, so once the combined term ratio drops to r <= 1/2 the discarded tail
    is at most |next term| / (1 - r).
    """
    if eps <= 0.0:
        raise DomainError(f"eps must be positive, got {eps!r}")
    if not params.q > 0.0:
        raise DomainError(f"criteria require q > 0, got q = {params.q!r}")
    q = params.q
    alpha, beta = cls.alpha, cls.beta
    signed = -params.c if as_printed else abs(params.c)

    def weight(k: int) -> float:
        w = (k - 1.0) + beta * (k + 1.0 - 2.0 * alpha)
        return w * k if convex else w

    total, comp = 0.0, 0.0
    m = 1.0  # m_k / |c|^(k-1) bookkeeping starts at a_1 = 1
    k = 1
    while True:
        m_next = m * signed / ((q + k - 1.0) * k)  # m_(k+1)
        summed = k - 1  # terms for k' = 2 .. k are in the accumulator

        if summed >= MIN_TERMS or m_next == 0.0:
            ratio = abs(signed) / ((q + k) * (k + 1.0))
            wr = weight(k + 2) / weight(k + 1)
            r = ratio * wr
            if r <= 0.5:
                tail = abs(weight(k + 1) * m_next) / (1.0 - r)
                if tail < eps:
                    return _report(total, tail, cls)

        if summed + 1 > max_terms:
            raise NoConvergenceError(
                f"tail bound {eps!r} not certified within {max_terms} terms"
            )
        m = m_next
        k += 1
        total, comp = _kahan_step(total, comp, weight(k) * m)


def starlike_sum(
    params: BesselParams,
    cls: ClassSpec,
    eps: float = DEFAULT_EPS,
    as_printed: bool = False,
    max_terms: int = MAX_TERMS,
) -> SumReport:
    """Starlike coefficient criterion: holds implies u is in S*(alpha, beta)."""
    return _weighted_sum(params, cls, False, eps, as_printed, max_terms)


def convex_sum(
    params: BesselParams,
    cls: ClassSpec,
    eps: float = DEFAULT_EPS,
    as_printed: bool = False,
    max_terms: int = MAX_TERMS,
) -> SumReport:
    """Convex coefficient criterion: holds implies u is in K(alpha, beta)."""
    return _weighted_sum(params, cls, True, eps, as_printed, max_terms)


def starlike_sum_closed_form(params: BesselParams, cls: ClassSpec) -> float:
    """Closed form of the starlike sum for c < 0, where every a_k is positive.

    Splitting the weight gives

        sum = (1 + beta) [u'(1) - u(1)] + 2 beta (1 - alpha) [u(1) - 1],

    which telescopes the weighted sum through the series values at z = 1.
    """
    if not params.c < 0.0:
        raise DomainError(f"closed form requires c < 0, got c = {params.c!r}")
    if not params.q > 0.0:
        raise DomainError(f"criteria require q > 0, got q = {params.q!r}")
    u, up, _ = eval_u_derivatives(params, 1.0, eps=1e-14)
    return (1.0 + cls.beta) * (up.value - u.value) + cls.threshold * (u.value - 1.0)
