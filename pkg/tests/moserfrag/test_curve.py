import numpy as np
import pytest

from src.errors import NotEmbeddedError, NotGraphNearMarkersError
from src.moserfrag import curve_extend, self_intersections, winding
from src.moserfrag.constants import CURVE_OUTER, TOL_CURVE

EPS = 0.06


def sine_curve(amplitude, m=200, turns=1):
    x = turns * np.arange(m) / m
    return np.column_stack([np.mod(x, 1.0), amplitude * np.sin(2 * np.pi * x)])


def folded_sine(m=1000, width=0.005, depth=0.01):
    """``0.02 sin(2 pi s)`` whose x runs backward for a few vertices around ``s = 0.5``."""
    s = np.arange(m) / m
    t = (s - 0.5) / width
    x = s - depth * t * np.exp(-(t**2))
    return np.column_stack([np.mod(x, 1.0), 0.02 * np.sin(2 * np.pi * s)])


def test_core_circle_gives_identity():
    core = sine_curve(0.0)
    result = curve_extend(core, EPS)
    assert result.vertex_residual <= 1e-12
    assert result.psi.c0_norm() <= TOL_CURVE
    assert result.folds == 0


def test_sine_curve_is_reached_from_core_circle():
    target = sine_curve(0.05)
    result = curve_extend(target, EPS)
    assert result.vertex_residual <= TOL_CURVE
    assert result.grid_residual <= TOL_CURVE
    assert result.boundary_identity
    assert result.c_prime < 1.0
    assert len(result.markers) == int(np.ceil(1.0 / EPS))
    assert result.refinements == 0


def test_stages_are_reported():
    result = curve_extend(sine_curve(0.04), EPS)
    lift, move, straighten = result.stage_norms
    assert lift == pytest.approx(3.0 * EPS)
    assert 0.0 < move <= 4.0 * EPS
    assert 0.0 < straighten <= 5.0 * EPS
    # each ray first meets the lifted curve at its height over the marker
    xs, hits = result.markers.T
    assert np.allclose(hits, 3.0 * EPS + 0.04 * np.sin(2 * np.pi * xs), atol=1e-3)


def test_exact_map_inverts():
    result = curve_extend(sine_curve(0.03), EPS)
    rng = np.random.default_rng(4)
    points = np.column_stack([rng.random(50), rng.uniform(-0.9, 0.9, 50)])
    back = result.exact.inverse(result.exact(points))
    assert np.allclose(back, points, atol=1e-5)


def test_orientation_does_not_matter():
    target = sine_curve(0.03)
    forward = curve_extend(target, EPS)
    backward = curve_extend(target[::-1], EPS)
    assert backward.vertex_residual <= TOL_CURVE
    assert np.allclose(forward.psi.forward, backward.psi.forward, atol=1e-9)


def test_folded_curve_is_straightened():
    target = folded_sine()
    assert np.any(np.diff(target[:, 0]) < 0)
    assert self_intersections(target) == []

    result = curve_extend(target, 0.05, n=129)

    assert result.folds == 1
    assert result.refinements >= 1
    assert result.vertex_residual <= TOL_CURVE
    assert result.boundary_identity
    # no rectangle sits under the backward run
    assert np.all(np.abs(result.markers[:, 0] - 0.5) > 0.003)
    gaps = np.diff(np.append(result.markers[:, 0], result.markers[0, 0] + 1.0))
    assert gaps.max() <= 0.05


def test_folded_curve_map_is_identity_near_the_rims():
    result = curve_extend(folded_sine(), 0.05, n=65)
    rim = np.column_stack([np.linspace(0, 1, 40, endpoint=False), np.full(40, CURVE_OUTER)])
    assert np.array_equal(result.exact(rim), rim)
    assert np.array_equal(result.exact(-rim), -rim)


def test_winding_and_crossings():
    assert winding(sine_curve(0.01)) == 1
    assert winding(sine_curve(0.01)[::-1]) == -1
    assert winding(sine_curve(0.01, turns=2)) == 2
    assert self_intersections(sine_curve(0.01)) == []


def test_double_wrap_is_not_embedded():
    with pytest.raises(NotEmbeddedError, match="wraps 2 times"):
        curve_extend(sine_curve(0.01, turns=2), EPS)


def test_self_crossing_curve_is_not_embedded():
    target = np.array(
        [[0.0, 0.0], [0.3, 0.0], [0.5, 0.02], [0.4, 0.02], [0.45, -0.01], [0.7, 0.0]]
    )
    assert self_intersections(target)
    with pytest.raises(NotEmbeddedError, match="crosses itself"):
        curve_extend(target, EPS)


def test_backward_run_along_a_level_cannot_be_straightened():
    target = np.array(
        [[0.0, 0.0], [0.2, 0.0], [0.4, 0.0], [0.35, 0.02], [0.5, 0.03], [0.7, 0.0], [0.9, 0.0]]
    )
    with pytest.raises(NotGraphNearMarkersError, match="monotonically"):
        curve_extend(target, EPS)


def test_wide_fold_leaves_no_room_for_markers():
    target = folded_sine(width=0.02, depth=0.04)
    with pytest.raises(NotGraphNearMarkersError, match="after 4 refinements"):
        curve_extend(target, 0.02, n=33)


def test_target_must_stay_near_core_circle():
    with pytest.raises(ValueError, match="reaches"):
        curve_extend(sine_curve(0.1), EPS)
