"""Closed-form sufficient conditions for starlikeness and convexity.

The two general conditions below majorize the weighted coefficient sums of
the criteria module by the exponential series, using the Pochhammer lower
bound (q)_(k-1) >= q (q+1)^(k-2).  With E = exp(s/(q+1)) and s = |c|, the
starlike condition reads

    2 beta (1-alpha) [2 - E + (1 - E)/q] - (1+beta) (s/q) E  >=  0,

and the convex condition, with E' = exp(-s/(q+1)),

    2 beta (1-alpha) (1 + (q+1)/q) E'
        - [ (1+beta) s^2/(q(q+1)) + 2 (1 + beta(2-alpha)) s/q
            + 2 beta (1-alpha) (q+1)/q ]  >=  0.

A nonnegative value certifies the corresponding coefficient sum, hence
class membership.  Each condition also has an "as printed" variant that
keeps s = -c literally; the variants coincide for c < 0 and differ for
c > 0, where only the |c| form still implies the coefficient bound.

Twelve special cases fix (b, c) to one of (1, 1), (1, -1), (2, 1) (the
first-kind, modified, and spherical series) and optionally beta = 1.  For
each, this module carries both the condition as printed in its source
display and the "derived" form obtained by substituting (b, c) into the
general display and clearing a fixed positive factor.  The two agree in
sign for ten of the twelve cases; for the modified-kind starlike pair the
printed display disagrees with direct substitution, and consistency_audit
documents the disagreement instead of silently picking a side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .bessel import BesselParams
from .criteria import ClassSpec
from .errors import BetaMismatchError, DomainError


class Variant(Enum):
    PRINTED = "printed"
    DERIVED = "derived"


class CriterionId(Enum):
    """One tag per closed-form condition."""

    STARLIKE_GENERAL = "starlike-general"
    CONVEX_GENERAL = "convex-general"
    STARLIKE_FIRST_KIND = "starlike-first-kind"
    STARLIKE_MODIFIED = "starlike-modified"
    STARLIKE_SPHERICAL = "starlike-spherical"
    CONVEX_FIRST_KIND = "convex-first-kind"
    CONVEX_MODIFIED = "convex-modified"
    CONVEX_SPHERICAL = "convex-spherical"
    STARLIKE_FIRST_KIND_BETA1 = "starlike-first-kind-beta1"
    STARLIKE_MODIFIED_BETA1 = "starlike-modified-beta1"
    STARLIKE_SPHERICAL_BETA1 = "starlike-spherical-beta1"
    CONVEX_FIRST_KIND_BETA1 = "convex-first-kind-beta1"
    CONVEX_MODIFIED_BETA1 = "convex-modified-beta1"
    CONVEX_SPHERICAL_BETA1 = "convex-spherical-beta1"


@dataclass(frozen=True)
class ConditionVerdict:
    """Signed condition value with its boolean outcome and provenance."""

    criterion: CriterionId
    variant: Variant
    value: float
    holds: bool
    inputs: tuple[tuple[str, float], ...]


def _verdict(criterion, variant, value, **inputs) -> ConditionVerdict:
    return ConditionVerdict(
        criterion=criterion,
        variant=variant,
        value=value,
        holds=value >= 0.0,
        inputs=tuple(sorted(inputs.items())),
    )


def _starlike_value(q: float, s: float, cls: ClassSpec) -> float:
    e = math.exp(s / (q + 1.0))
    return cls.threshold * (2.0 - e + (1.0 - e) / q) - (1.0 + cls.beta) * s / q * e


def _convex_value(q: float, s: float, cls: ClassSpec) -> float:
    e = math.exp(-s / (q + 1.0))
    bracket = (
        (1.0 + cls.beta) * s * s / (q * (q + 1.0))
        + 2.0 * (1.0 + cls.beta * (2.0 - cls.alpha)) * s / q
        + cls.threshold * (q + 1.0) / q
    )
    return cls.threshold * (1.0 + (q + 1.0) / q) * e - bracket


def starlike_condition(
    params: BesselParams, cls: ClassSpec, variant: Variant = Variant.DERIVED
) -> ConditionVerdict:
    """General starlike condition; holds implies u is in S*(alpha, beta).

    The printed variant uses s = -c literally (its sufficiency proof assumes
    c < 0); the derived variant uses s = |c|, which keeps the implication to
    the coefficient criterion valid for either sign of c.
    """
    if not params.q > 0.0:
        raise DomainError(f"condition requires q > 0, got q = {params.q!r}")
    s = -params.c if variant is Variant.PRINTED else abs(params.c)
    value = _starlike_value(params.q, s, cls)
    return _verdict(
        CriterionId.STARLIKE_GENERAL, variant, value,
        p=params.p, b=params.b, c=params.c, alpha=cls.alpha, beta=cls.beta,
    )


def convex_condition(
    params: BesselParams, cls: ClassSpec, variant: Variant = Variant.DERIVED
) -> ConditionVerdict:
    """General convex condition; holds implies u is in K(alpha, beta)."""
    if not params.q > 0.0:
        raise DomainError(f"condition requires q > 0, got q = {params.q!r}")
    s = -params.c if variant is Variant.PRINTED else abs(params.c)
    value = _convex_value(params.q, s, cls)
    return _verdict(
        CriterionId.CONVEX_GENERAL, variant, value,
        p=params.p, b=params.b, c=params.c, alpha=cls.alpha, beta=cls.beta,
    )


def _f(p: float) -> float:
    return math.exp(1.0 / (p + 2.0))


def _g(p: float) -> float:
    return math.exp(2.0 / (2.0 * p + 5.0))


# Printed displays of the twelve special cases.  F = exp(1/(p+2)) and
# G = exp(2/(2p+5)) abbreviate the exponentials of the two q values p+1
# and p+3/2.


def _p_star_fk(p, a, b):
    return 2*b*(1-a) * (_f(p)*(2*p+3) - (p+2)) + b + 1


def _p_star_mod(p, a, b):
    return 2*b*(1-a) * ((2*p+3) - (p+2)*_f(p)) + (b+1)*_f(p)


def _p_star_sph(p, a, b):
    return b*(1-a)*(2*p+4)*(2*_g(p) - 1) + a*b + 1


def _p_conv_fk(p, a, b):
    return (2*b*(1-a)*(1 + (p+2)/(p+1))*_f(p)
            - ((1+b)/((p+1)*(p+2)) + 2*b*(1-a)*(p+2)/(p+1)
               - 2*(1 + b*(2-a))/(p+1)))


def _p_conv_mod(p, a, b):
    return (2*b*(1-a)*(1 + (p+2)/(p+1))
            - ((1+b)/((p+1)*(p+2)) + 2*(1 + b*(2-a))/(p+1)
               + 2*b*(1-a)*(p+2)/(p+1))*_f(p))


def _p_conv_sph(p, a, b):
    return (b*(1-a)*(1 + (2*p+5)/(2*p+3))*_g(p)
            - (2*(1+b)/((2*p+3)*(2*p+5)) + b*(1-a)*(2*p+5)/(2*p+3)
               - 2*(1 + b*(2-a))/(2*p+3)))


def _p_star_fk_b1(p, a, b):
    return (1-a)*(_f(p)*(2*p+3) - (p+2)) + 1


def _p_star_mod_b1(p, a, b):
    return (1-a)*((2*p+3) - (p+2)*_f(p)) + _f(p)


def _p_star_sph_b1(p, a, b):
    return (1-a)*(2*p+4)*(2*_g(p) - 1) + a + 1


def _p_conv_fk_b1(p, a, b):
    return ((1-a)*(1 + (p+2)/(p+1))*_f(p)
            - (1/((p+1)*(p+2)) + (1-a)*(p+2)/(p+1) - (3-a)/(p+1)))


def _p_conv_mod_b1(p, a, b):
    return ((1-a)*(1 + (p+2)/(p+1))
            - (1/((p+1)*(p+2)) + (3-a)/(p+1) + (1-a)*(p+2)/(p+1))*_f(p))


def _p_conv_sph_b1(p, a, b):
    return ((1-a)*(1 + (2*p+5)/(2*p+3))*_g(p)
            - (4/((2*p+3)*(2*p+5)) + (1-a)*(2*p+5)/(2*p+3) - 2*(3-a)/(2*p+3)))


@dataclass(frozen=True)
class _SpecialCase:
    b: float
    c: float
    p_low: float
    beta1: bool
    convex: bool
    printed: Callable[[float, float, float], float]
    # Positive factor clearing the general display into the printed scale.
    factor: Callable[[float], float]


_SPECIAL_CASES: dict[CriterionId, _SpecialCase] = {
    CriterionId.STARLIKE_FIRST_KIND: _SpecialCase(
        1.0, 1.0, -1.0, False, False, _p_star_fk, lambda p: (p + 1) * _f(p)),
    CriterionId.STARLIKE_MODIFIED: _SpecialCase(
        1.0, -1.0, -1.0, False, False, _p_star_mod, lambda p: p + 1),
    CriterionId.STARLIKE_SPHERICAL: _SpecialCase(
        2.0, 1.0, -1.5, False, False, _p_star_sph, lambda p: (p + 1.5) * _g(p)),
    CriterionId.CONVEX_FIRST_KIND: _SpecialCase(
        1.0, 1.0, -1.0, False, True, _p_conv_fk, lambda p: 1.0),
    CriterionId.CONVEX_MODIFIED: _SpecialCase(
        1.0, -1.0, -1.0, False, True, _p_conv_mod, lambda p: _f(p)),
    CriterionId.CONVEX_SPHERICAL: _SpecialCase(
        2.0, 1.0, -1.5, False, True, _p_conv_sph, lambda p: 0.5),
    CriterionId.STARLIKE_FIRST_KIND_BETA1: _SpecialCase(
        1.0, 1.0, -1.0, True, False, _p_star_fk_b1, lambda p: (p + 1) * _f(p) / 2),
    CriterionId.STARLIKE_MODIFIED_BETA1: _SpecialCase(
        1.0, -1.0, -1.0, True, False, _p_star_mod_b1, lambda p: (p + 1) / 2),
    CriterionId.STARLIKE_SPHERICAL_BETA1: _SpecialCase(
        2.0, 1.0, -1.5, True, False, _p_star_sph_b1, lambda p: (p + 1.5) * _g(p)),
    CriterionId.CONVEX_FIRST_KIND_BETA1: _SpecialCase(
        1.0, 1.0, -1.0, True, True, _p_conv_fk_b1, lambda p: 0.5),
    CriterionId.CONVEX_MODIFIED_BETA1: _SpecialCase(
        1.0, -1.0, -1.0, True, True, _p_conv_mod_b1, lambda p: _f(p) / 2),
    CriterionId.CONVEX_SPHERICAL_BETA1: _SpecialCase(
        2.0, 1.0, -1.5, True, True, _p_conv_sph_b1, lambda p: 0.5),
}

# Value ratio between each full display and its beta = 1 specialization,
# used by tests to relate the two printed scales.
BETA1_PAIRS: dict[CriterionId, tuple[CriterionId, float]] = {
    CriterionId.STARLIKE_FIRST_KIND_BETA1: (CriterionId.STARLIKE_FIRST_KIND, 2.0),
    CriterionId.STARLIKE_MODIFIED_BETA1: (CriterionId.STARLIKE_MODIFIED, 2.0),
    CriterionId.STARLIKE_SPHERICAL_BETA1: (CriterionId.STARLIKE_SPHERICAL, 1.0),
    CriterionId.CONVEX_FIRST_KIND_BETA1: (CriterionId.CONVEX_FIRST_KIND, 2.0),
    CriterionId.CONVEX_MODIFIED_BETA1: (CriterionId.CONVEX_MODIFIED, 2.0),
    CriterionId.CONVEX_SPHERICAL_BETA1: (CriterionId.CONVEX_SPHERICAL, 1.0),
}

SPECIAL_CRITERIA: tuple[CriterionId, ...] = tuple(_SPECIAL_CASES)

# The ten special cases whose printed display is sign-equivalent to direct
# substitution, and the two where it is not.
AGREEING_CRITERIA: tuple[CriterionId, ...] = tuple(
    cid for cid in _SPECIAL_CASES
    if cid not in (CriterionId.STARLIKE_MODIFIED, CriterionId.STARLIKE_MODIFIED_BETA1)
)
DISAGREEING_CRITERIA: tuple[CriterionId, ...] = (
    CriterionId.STARLIKE_MODIFIED,
    CriterionId.STARLIKE_MODIFIED_BETA1,
)


def special_case_condition(
    criterion: CriterionId,
    p: float,
    cls: ClassSpec,
    variant: Variant = Variant.PRINTED,
) -> ConditionVerdict:
    """Evaluate one of the twelve specialized conditions at order p.

    PRINTED transcribes the specialized display verbatim.  DERIVED
    substitutes the case's (b, c) into the general display as written and
    multiplies by the case's fixed positive clearing factor, so the result
    is directly comparable with the printed value.
    """
    case = _SPECIAL_CASES.get(criterion)
    if case is None:
        raise DomainError(f"{criterion} is not a specialized criterion")
    if not p > case.p_low:
        raise DomainError(f"{criterion.value} requires p > {case.p_low}, got {p!r}")
    if case.beta1 and cls.beta != 1.0:
        raise BetaMismatchError(
            f"{criterion.value} is defined for beta = 1, got beta = {cls.beta!r}"
        )
    if variant is Variant.PRINTED:
        value = case.printed(p, cls.alpha, cls.beta)
    else:
        q = p + (case.b + 1.0) / 2.0
        base = _convex_value(q, -case.c, cls) if case.convex else _starlike_value(q, -case.c, cls)
        value = base * case.factor(p)
    return _verdict(
        criterion, variant, value,
        p=p, b=case.b, c=case.c, alpha=cls.alpha, beta=cls.beta,
    )


# Default audit grid: 50 orders by 5 alphas by 5 betas.
AUDIT_P_VALUES: tuple[float, ...] = tuple(-0.9 + i * (10.8 / 49.0) for i in range(50))
AUDIT_ALPHAS: tuple[float, ...] = (0.0, 0.2, 0.4, 0.6, 0.8)
AUDIT_BETAS: tuple[float, ...] = (0.2, 0.4, 0.6, 0.8, 1.0)

# Reference point where the modified-kind starlike pair visibly splits:
# printed 10 - 4 exp(1/3) > 0, derived 10 - 8 exp(1/3) < 0.
PINNED_DISAGREEMENT = {
    "criterion": CriterionId.STARLIKE_MODIFIED,
    "p": 1.0,
    "alpha": 0.0,
    "beta": 1.0,
}


def consistency_audit(
    p_values: tuple[float, ...] = AUDIT_P_VALUES,
    alphas: tuple[float, ...] = AUDIT_ALPHAS,
    betas: tuple[float, ...] = AUDIT_BETAS,
    max_examples: int = 5,
) -> dict:
    """Compare printed against derived sign flags for every special case.

    beta = 1 cases are audited on the (p, alpha) sub-grid with beta fixed
    at 1.  Returns a JSON-ready report with per-criterion agreement counts,
    example disagreement points, and the pinned reference disagreement.
    """
    criteria_report: dict = {}
    for cid, case in _SPECIAL_CASES.items():
        beta_axis = (1.0,) if case.beta1 else betas
        points = agreements = 0
        examples: list[dict] = []
        min_abs_printed = math.inf
        for p in p_values:
            for alpha in alphas:
                for beta in beta_axis:
                    cls = ClassSpec(alpha, beta)
                    printed = special_case_condition(cid, p, cls, Variant.PRINTED)
                    derived = special_case_condition(cid, p, cls, Variant.DERIVED)
                    points += 1
                    min_abs_printed = min(min_abs_printed, abs(printed.value))
                    if printed.holds == derived.holds:
                        agreements += 1
                    elif len(examples) < max_examples:
                        examples.append({
                            "p": p, "alpha": alpha, "beta": beta,
                            "printed": printed.value, "derived": derived.value,
                        })
        criteria_report[cid.name] = {
            "points": points,
            "agreements": agreements,
            "disagreements": points - agreements,
            "disagreement_examples": examples,
            "min_abs_printed": min_abs_printed,
        }

    pin = PINNED_DISAGREEMENT
    cls = ClassSpec(pin["alpha"], pin["beta"])
    printed = special_case_condition(pin["criterion"], pin["p"], cls, Variant.PRINTED)
    derived = special_case_condition(pin["criterion"], pin["p"], cls, Variant.DERIVED)
    return {
        "grid": {
            "p_values": list(p_values),
            "alphas": list(alphas),
            "betas": list(betas),
        },
        "criteria": criteria_report,
        "pinned_case": {
            "criterion": pin["criterion"].name,
            "p": pin["p"],
            "alpha": pin["alpha"],
            "beta": pin["beta"],
            "printed": printed.value,
            "printed_holds": printed.holds,
            "derived": derived.value,
            "derived_holds": derived.holds,
        },
    }
