import numpy as np
import pytest

from src.errors import SupportEscapesDomainError, UnsupportedDomainError
from src.hamflow import (
    Domain,
    FunctionHamiltonian,
    HamiltonianFactory,
    HamiltonianPreset,
    Support,
    bump,
    sgrad,
    vanishes_outside_support,
)
from src.hamflow.profiles import cutoff, plateau_mass, smooth_step


def constant(points, t):
    return np.full(len(points), 3.0)


def coordinate_p(points, t):
    return points[:, 0]


def everywhere_one(points, t):
    return np.ones(len(points))


@pytest.fixture
def disc():
    return Domain.disc()


def test_sgrad_of_constant_is_zero(disc):
    F = FunctionHamiltonian(disc, constant)
    np.testing.assert_allclose(sgrad(F, np.array([0.2, -0.1])), [0.0, 0.0], atol=1e-9)


def test_sgrad_of_coordinate_p_is_vertical(disc):
    F = FunctionHamiltonian(disc, coordinate_p)
    np.testing.assert_allclose(sgrad(F, np.array([0.3, 0.4])), [0.0, 1.0], atol=1e-8)


def test_sgrad_of_quadratic_is_rotation_field(disc):
    F = HamiltonianFactory.create(HamiltonianPreset.QUADRATIC)
    points = np.array([[0.1, 0.2], [-0.5, 0.3], [0.0, -0.7]])
    expected = np.column_stack([-points[:, 1], points[:, 0]])
    np.testing.assert_allclose(sgrad(F, points), expected, atol=1e-12)


def test_bump_rotates_clockwise():
    F = bump(Domain.torus(), (0.5, 0.5), 0.25, 0.01)
    angles = F.rotation_angle(np.array([[0.6, 0.5], [0.5, 0.68]]), 0.0, 1.0)
    assert np.all(angles <= 0.0)
    assert np.any(angles < 0.0)


def test_bump_with_zero_mass_is_zero():
    F = bump(Domain.torus(), (0.5, 0.5), 0.2, 0.0)
    grid = Domain.torus().evaluation_grid(32)
    assert np.all(F.value(grid) == 0.0)
    assert np.all(F.sgrad(grid) == 0.0)


def test_halving_radius_quadruples_peak():
    domain = Domain.torus()
    wide = bump(domain, (0.5, 0.5), 0.2, 1.0)
    narrow = bump(domain, (0.5, 0.5), 0.1, 1.0)
    center = np.array([0.5, 0.5])
    assert narrow.value(center)[0] == pytest.approx(4.0 * wide.value(center)[0], rel=1e-12)


def test_bump_support_must_fit_in_disc(disc):
    with pytest.raises(SupportEscapesDomainError):
        bump(disc, (0.6, 0.0), 0.5, 1.0)
    with pytest.raises(SupportEscapesDomainError):
        bump(Domain.torus(), (0.5, 0.5), 0.6, 1.0)


def test_bump_vanishes_outside_its_support():
    F = bump(Domain.torus(), (0.1, 0.9), 0.3, 0.5)
    assert vanishes_outside_support(F, seed=3)


def test_mislabelled_support_is_detected():
    F = FunctionHamiltonian(
        Domain.torus(), everywhere_one, support=Support.disc((0.5, 0.5), 0.1)
    )
    assert not vanishes_outside_support(F, seed=3)


def test_shifted_bump_moves_center_across_the_seam():
    F = bump(Domain.torus(), (0.9, 0.5), 0.2, 0.1).shifted((0.2, 0.0))
    assert F.center == pytest.approx((0.1, 0.5))
    assert F.value(np.array([0.1, 0.5]))[0] > 0.0
    assert F.value(np.array([0.9, 0.5]))[0] == 0.0


def test_scaled_multiplies_values():
    F = bump(Domain.torus(), (0.5, 0.5), 0.2, 0.1)
    points = np.array([[0.5, 0.5], [0.55, 0.6]])
    np.testing.assert_allclose(F.scaled(3.0).value(points), 3.0 * F.value(points))


def test_quadratic_needs_the_disc():
    with pytest.raises(UnsupportedDomainError):
        HamiltonianFactory.create(HamiltonianPreset.QUADRATIC, domain="torus")


def test_factory_reports_unknown_preset():
    with pytest.raises(ValueError, match="Available presets"):
        HamiltonianFactory.create("spiral")


def test_factory_requires_parameters():
    with pytest.raises(ValueError, match="mass"):
        HamiltonianFactory.create(HamiltonianPreset.BUMP, radius=0.2)


def test_smooth_step_and_cutoff_levels():
    u = np.array([-1.0, 0.0, 0.5, 1.0, 2.0])
    np.testing.assert_allclose(smooth_step(u), [0.0, 0.0, 0.5, 1.0, 1.0])
    x = np.array([0.0, 0.1, 0.2, 0.3])
    np.testing.assert_allclose(cutoff(x, 0.1, 0.2), [1.0, 1.0, 0.0, 0.0])
    assert float(smooth_step(0.25)) == pytest.approx(1.0 - float(smooth_step(0.75)))


def test_plateau_mass_lies_between_inner_and_outer_discs():
    assert np.pi * 0.25 < plateau_mass() < np.pi
