"""Unit-disk sampling: quotients, guards, vectorized sup estimates."""

import cmath
import math

import pytest

from besselgeom import (
    BesselParams,
    ClassSpec,
    DegenerateError,
    DiskGrid,
    DomainError,
    QuotientKind,
    convex_quotient,
    eval_u_derivatives,
    starlike_quotient,
    starlike_sum,
    sup_estimate,
)
from conftest import draw_chain_inputs, ref_u_derivs

CLS01 = ClassSpec(0.0, 1.0)

# Deliberately extreme regression fixture: q = 0.05, c = -5 has a zero of u
# inside the disk and violates the starlike bound on 163 default-grid points.
BAD = BesselParams(-0.95, 1.0, -5.0)
BAD_MAX = 2.6787924754830135
BAD_VIOLATIONS = 163
U_ZERO = -0.010247975388452294  # real zero of u for the BAD parameters


def test_quotient_domain():
    with pytest.raises(DomainError):
        starlike_quotient(BesselParams(1.0, 1.0, -1.0), 0.0, 0.0)
    with pytest.raises(DomainError):
        starlike_quotient(BesselParams(1.0, 1.0, -1.0), 1.0, 0.0)
    with pytest.raises(DomainError):
        convex_quotient(BesselParams(1.0, 1.0, -1.0), complex(0.8, 0.6), 0.0)


def test_quotient_small_z_limits():
    # w -> 1 and v -> 0 as z -> 0, so both quotients vanish at the origin.
    params = BesselParams(1.0, 1.0, -1.0)
    assert starlike_quotient(params, 1e-3, 0.0) < 1e-3
    assert convex_quotient(params, 1e-3, 0.0) < 1e-2


def test_quotient_against_reference():
    params = BesselParams(1.3, 1.0, -0.7)
    alpha = 0.2
    for z in (complex(0.3, 0.4), complex(-0.55, 0.1), complex(0.0, 0.9)):
        u, up, upp = ref_u_derivs(1.3, 1.0, -0.7, z)
        w = z * up / u
        want = abs((w - 1.0) / (w + 1.0 - 2.0 * alpha))
        assert starlike_quotient(params, z, alpha) == pytest.approx(want, rel=1e-12)
        v = z * upp / up
        want = abs(v / (v + 2.0 * (1.0 - alpha)))
        assert convex_quotient(params, z, alpha) == pytest.approx(want, rel=1e-12)


def test_degenerate_guard_scalar():
    with pytest.raises(DegenerateError):
        starlike_quotient(BAD, complex(U_ZERO, 0.0), 0.0)


def test_duality_quotient_identity(rng):
    # convex quotient of u == starlike quotient of g(z) = z u'(z), evaluated
    # through the independent series for g: w_g = 1 + z u''/u'.
    checked = 0
    while checked < 60:
        params, alpha, _ = draw_chain_inputs(rng)
        r = rng.uniform(0.05, 0.95)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        z = r * cmath.exp(1j * theta)
        _, up, upp = ref_u_derivs(params.p, params.b, params.c, z)
        try:
            got = convex_quotient(params, z, alpha)
        except DegenerateError:
            continue
        w_g = 1.0 + z * upp / up
        want = abs((w_g - 1.0) / (w_g + 1.0 - 2.0 * alpha))
        assert abs(got - want) < 1e-10
        checked += 1


def test_grid_validation():
    with pytest.raises(DomainError):
        DiskGrid(radii=())
    with pytest.raises(DomainError):
        DiskGrid(radii=(0.0, 0.5))
    with pytest.raises(DomainError):
        DiskGrid(radii=(1.0,))
    with pytest.raises(DomainError):
        DiskGrid(radii=(0.5,), angles_per_ring=0)


def test_default_grid_shape():
    grid = DiskGrid()
    pts = grid.points()
    assert len(pts) == 12 * 720
    assert max(abs(pts)) == pytest.approx(0.999, rel=1e-15)
    assert min(abs(pts)) == pytest.approx(0.1, rel=1e-12)


def test_violation_fixture_frozen():
    est = sup_estimate(BAD, CLS01, QuotientKind.STARLIKE)
    assert est.max_quotient == pytest.approx(BAD_MAX, rel=1e-12)
    assert est.violations == BAD_VIOLATIONS
    assert est.degenerate_points == 0
    assert abs(est.argmax_z - complex(-0.5, 0.0)) < 1e-9


def test_degenerate_counted_not_fatal():
    # a two-point ring through the real zero of u: one point trips the
    # guard and is excluded, the other still reports a quotient
    grid = DiskGrid(radii=(-U_ZERO,), angles_per_ring=2)
    est = sup_estimate(BAD, CLS01, QuotientKind.STARLIKE, grid)
    assert est.degenerate_points == 1
    assert est.violations == 0
    assert est.max_quotient == pytest.approx(0.2077952770540287, rel=1e-10)


def test_vectorized_matches_scalar(rng):
    grid = DiskGrid(radii=(0.2, 0.6, 0.9), angles_per_ring=16)
    for _ in range(10):
        params, alpha, beta = draw_chain_inputs(rng)
        cls = ClassSpec(alpha, beta)
        for kind, quot in (
            (QuotientKind.STARLIKE, starlike_quotient),
            (QuotientKind.CONVEX, convex_quotient),
        ):
            est = sup_estimate(params, cls, kind, grid)
            best = 0.0
            for z in grid.points():
                try:
                    best = max(best, quot(params, complex(z), cls.alpha))
                except DegenerateError:
                    continue
            assert est.max_quotient == pytest.approx(best, rel=1e-10)


def test_certified_draws_have_no_violations(rng):
    # lemma HOLDS must imply zero sampled violations (soundness, spot scale)
    checked = 0
    while checked < 30:
        params, alpha, beta = draw_chain_inputs(rng)
        cls = ClassSpec(alpha, beta)
        if not starlike_sum(params, cls).holds:
            continue
        est = sup_estimate(params, cls, QuotientKind.STARLIKE)
        assert est.violations == 0
        assert est.max_quotient < cls.beta
        checked += 1


def test_sup_argmax_on_outer_ring():
    est = sup_estimate(BesselParams(10.0, 1.0, -0.1), CLS01, QuotientKind.STARLIKE)
    assert abs(abs(est.argmax_z) - 0.999) < 1e-12
    assert est.violations == 0
