"""Figure functions, bisection thresholds, positivity scans."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselgeom import (
    FIGURES,
    DomainError,
    NoBracketError,
    SingularityError,
    figure_eval,
    find_all_thresholds,
    find_threshold,
    positivity_scan,
)

# Frozen roots at tol = 1e-12 (bisection against the exact displays).
ROOTS = {
    1: -1.5314447497839863,
    3: -2.0314447497839874,
    4: -1.5254271938996682,
    5: 3.8522583142788784,
    6: -2.0254271938996684,
}
QUOTED = {1: -1.5314, 3: -2.0314, 4: -1.5254, 5: 3.8523, 6: -2.0254}
LEFT_ROOTS = {1: -3.9663567216839883, 4: -6.228212167411693}
ROOT_COUNTS = {1: 2, 2: 0, 3: 2, 4: 2, 5: 1, 6: 2}


def test_frozen_point_values():
    assert figure_eval(1, 0.0) == pytest.approx(3.0 * math.exp(0.5) - 1.0, rel=1e-15)
    assert figure_eval(1, 0.0) == pytest.approx(3.9461638121003846, rel=1e-14)
    assert figure_eval(4, -1.0) == pytest.approx(math.e + 1.0, rel=1e-15)
    assert figure_eval(4, -1.0) == pytest.approx(3.718281828459045, rel=1e-14)


def test_figure_eval_domain():
    with pytest.raises(DomainError):
        figure_eval(0, 1.0)
    with pytest.raises(DomainError):
        figure_eval(7, 1.0)
    with pytest.raises(DomainError):
        figure_eval(1, math.inf)
    with pytest.raises(SingularityError):
        figure_eval(1, -2.0)
    with pytest.raises(SingularityError):
        figure_eval(3, -2.5)


def test_near_singularity_saturates():
    # approaching the essential singularity from the right overflows exp;
    # the value saturates to +/- infinity instead of raising
    assert math.isinf(figure_eval(1, -2.0 + 1e-14))


def test_rightmost_roots_frozen():
    for fid, want in ROOTS.items():
        root = find_threshold(fid, tol=1e-12)
        assert abs(root.x0 - want) < 5e-12
        assert abs(root.x0 - QUOTED[fid]) < 1e-3


def test_left_roots_and_counts():
    for fid, count in ROOT_COUNTS.items():
        if fid == 2:
            assert find_all_thresholds(fid) == []
            continue
        roots = find_all_thresholds(fid, tol=1e-12)
        assert len(roots) == count
        assert [r.x0 for r in roots] == sorted(r.x0 for r in roots)
    for fid, want in LEFT_ROOTS.items():
        assert abs(find_all_thresholds(fid, tol=1e-12)[0].x0 - want) < 5e-12


def test_no_bracket_for_figure2():
    with pytest.raises(NoBracketError):
        find_threshold(2)


def test_root_result_invariants():
    tol = 1e-10
    root = find_threshold(1, tol=tol)
    a, b = root.bracket
    assert b - a <= 2.0 * tol
    assert figure_eval(1, a) * figure_eval(1, b) <= 0.0
    assert root.residual == abs(figure_eval(1, root.x0))
    assert root.iterations > 0


def test_tol_domain():
    with pytest.raises(DomainError):
        find_threshold(1, tol=0.0)
    with pytest.raises(DomainError):
        find_all_thresholds(1, tol=-1e-9)


def test_positivity_scan_examples():
    assert positivity_scan(1, -1.5, 50.0, 0.01) == []
    assert positivity_scan(2, -1.999, 50.0, 0.01) == []
    brackets = positivity_scan(5, -1.9, 4.0, 0.01)
    assert brackets
    assert any(a <= ROOTS[5] <= b for a, b in brackets)


def test_positivity_scan_domain():
    with pytest.raises(DomainError):
        positivity_scan(1, -2.5, 10.0, 0.01)  # starts left of the singularity
    with pytest.raises(DomainError):
        positivity_scan(1, -1.5, 10.0, 0.0)
    assert positivity_scan(1, 5.0, 1.0, 0.01) == []  # empty range


def test_scaling_identities():
    # the spherical displays are fixed multiples of the first-kind displays
    # shifted by one half
    for x in (-1.8, -0.3, 1.0, 4.7, 20.0):
        assert figure_eval(3, x - 0.5) == pytest.approx(2.0 * figure_eval(1, x), rel=1e-12)
        assert figure_eval(6, x - 0.5) == pytest.approx(4.0 * figure_eval(4, x), rel=1e-12)


def test_labels_cover_six_figures():
    assert sorted(FIGURES) == [1, 2, 3, 4, 5, 6]
    assert {FIGURES[i].singularity for i in (1, 2, 4, 5)} == {-2.0}
    assert {FIGURES[i].singularity for i in (3, 6)} == {-2.5}
    assert len({FIGURES[i].label for i in FIGURES}) == 6


@settings(max_examples=60, deadline=None)
@given(x=st.floats(-1.99, 60.0))
def test_figures_finite_right_of_singularity(x):
    for fid in (1, 2, 4, 5):
        assert math.isfinite(figure_eval(fid, x))
