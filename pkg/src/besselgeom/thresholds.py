"""Auxiliary threshold functions and their critical points.

Six real functions g_1 .. g_6 mark, as a function of the order x, where the
beta = 1, alpha = 0 specialized conditions change sign.  Each g_i equals the
corresponding *_BETA1 condition value at alpha = 0 and order x, cleared of a
positive factor:

    id  kind / class                 cleared factor        singularity
    1   first-kind / starlike        1                     x = -2
    2   modified   / starlike        1                     x = -2
    3   spherical  / starlike        1                     x = -5/2
    4   first-kind / convex          (x+1)(x+2)            x = -2
    5   modified   / convex          (x+1)(x+2)            x = -2
    6   spherical  / convex          (2x+3)(2x+5)          x = -5/2

The largest zero x0 of g_i is the threshold order: g_i > 0 (hence the
condition holds) for all x > x0.  Roots are located by scanning both sides
of the essential singularity for sign changes and bisecting each bracket;
the right-most root is the reported threshold.  Function 2 is positive on
both sides of its singularity and has no root at all.

Near the singularity the exponential factor overflows; evaluations then
return +/-inf with the correct sign rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NoBracketError, SingularityError

DEFAULT_TOL = 1e-10
SCAN_STEP = 0.01
WINDOW = 100.0
SING_MARGIN = 1e-6


def _exp(t: float) -> float:
    """exp saturating to +inf instead of raising on overflow."""
    try:
        return math.exp(t)
    except OverflowError:
        return math.inf


def _g1(x: float) -> float:
    return (2*x + 3) * _exp(1/(x + 2)) - (x + 1)


def _g2(x: float) -> float:
    return (2*x + 3) - _exp(1/(x + 2)) * (x + 1)


def _g3(x: float) -> float:
    return 4*(x + 2) * _exp(2/(2*x + 5)) - (2*x + 3)


def _g4(x: float) -> float:
    return (2*x*x + 7*x + 6) * _exp(1/(x + 2)) - (x*x + x - 1)


def _g5(x: float) -> float:
    return (2*x*x + 7*x + 6) - (x*x + 7*x + 11) * _exp(1/(x + 2))


def _g6(x: float) -> float:
    return (8*x*x + 36*x + 40) * _exp(2/(2*x + 5)) - (4*x*x + 8*x - 1)


@dataclass(frozen=True)
class FigureSpec:
    fig_id: int
    singularity: float
    label: str
    func: Callable[[float], float]


FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(1, -2.0, "first-kind starlike threshold function", _g1),
    2: FigureSpec(2, -2.0, "modified starlike threshold function", _g2),
    3: FigureSpec(3, -2.5, "spherical starlike threshold function", _g3),
    4: FigureSpec(4, -2.0, "first-kind convex threshold function", _g4),
    5: FigureSpec(5, -2.0, "modified convex threshold function", _g5),
    6: FigureSpec(6, -2.5, "spherical convex threshold function", _g6),
}


@dataclass(frozen=True)
class RootResult:
    """A bisection-located zero with its final bracket and residual."""

    x0: float
    bracket: tuple[float, float]
    iterations: int
    residual: float


def _spec(fig_id: int) -> FigureSpec:
    spec = FIGURES.get(fig_id)
    if spec is None:
        raise DomainError(f"figure id must be in 1..6, got {fig_id!r}")
    return spec


def figure_eval(fig_id: int, x: float) -> float:
    """Evaluate g_{fig_id}(x).  Both sides of the singularity are legal."""
    spec = _spec(fig_id)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if x == spec.singularity:
        raise SingularityError(
            f"figure {fig_id} has an essential singularity at x = {spec.singularity}"
        )
    return spec.func(x)


def _sign_changes(
    func: Callable[[float], float], low: float, high: float, step: float
) -> list[tuple[float, float]]:
    """Brackets [x, x+step] on which func changes sign (or hits 0 at x+step)."""
    out: list[tuple[float, float]] = []
    n = int(math.floor((high - low) / step + 1e-9))
    xs = [low + i * step for i in range(n + 1)]
    if xs[-1] < high:
        xs.append(high)
    fa = func(xs[0])
    for a, b in zip(xs, xs[1:]):
        fb = func(b)
        if fa * fb < 0.0 or fb == 0.0:
            out.append((a, b))
        fa = fb
    return out


def positivity_scan(
    fig_id: int, low: float, high: float, step: float
) -> list[tuple[float, float]]:
    """Every grid interval on which g changes sign; empty means none at this resolution."""
    spec = _spec(fig_id)
    if not low > spec.singularity:
        raise DomainError(
            f"scan must start right of the singularity {spec.singularity}, got low = {low!r}"
        )
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    if low >= high:
        return []
    return _sign_changes(spec.func, low, high, step)


def _bisect(func: Callable[[float], float], a: float, b: float, tol: float) -> RootResult:
    fa = func(a)
    iterations = 0
    while (b - a) / 2.0 > tol:
        mid = 0.5 * (a + b)
        fm = func(mid)
        iterations += 1
        if fm == 0.0:
            a = b = mid
            break
        if (fa < 0.0) != (fm < 0.0):
            b = mid
        else:
            a, fa = mid, fm
    x0 = 0.5 * (a + b)
    return RootResult(x0, (a, b), iterations, abs(func(x0)))


def find_all_thresholds(fig_id: int, tol: float = DEFAULT_TOL) -> list[RootResult]:
    """All sign-change roots in the windows singularity +/- [1e-6, 100], ascending."""
    spec = _spec(fig_id)
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    s = spec.singularity
    brackets = _sign_changes(spec.func, s - WINDOW, s - SING_MARGIN, SCAN_STEP)
    brackets += _sign_changes(spec.func, s + SING_MARGIN, s + WINDOW, SCAN_STEP)
    return [_bisect(spec.func, a, b, tol) for a, b in brackets]


def find_threshold(fig_id: int, tol: float = DEFAULT_TOL) -> RootResult:
    """The right-most root (the threshold beyond which g stays positive).

    Raises NoBracketError when no sign change exists in the searched
    windows, as happens for figure 2.
    """
    roots = find_all_thresholds(fig_id, tol)
    if not roots:
        spec = _spec(fig_id)
        raise NoBracketError(
            f"figure {fig_id} has no sign change within {WINDOW} of {spec.singularity}"
        )
    return roots[-1]
