import numpy as np
import pytest

from src.errors import UnequalMassError
from src.moserfrag import (
    Grid,
    GridForm,
    moser_equalize,
    perturbation_suite,
    pullback_residual,
    pushforward_density,
    refinement_study,
)
from src.moserfrag.constants import REFINEMENT_MIN_ORDER, TOL_PULLBACK


@pytest.fixture
def omega():
    grid = Grid.rectangle((0.0, 1.0, 0.0, 1.0), 97)
    return GridForm.from_function(
        grid, lambda p: 1.0 + 0.3 * np.sin(np.pi * p[:, 0]) * np.sin(np.pi * p[:, 1])
    )


def test_equal_forms_give_identity(omega):
    f = moser_equalize(omega, omega)
    assert f.is_identity
    assert f.c0_norm() == 0.0


def test_pushforward_preserves_boundary_and_mass(omega):
    target = pushforward_density(omega, 0.01)
    assert target.total == pytest.approx(omega.total, rel=1e-4)
    assert np.allclose(target.density[0], omega.density[0], rtol=0.0, atol=1e-12)
    assert np.allclose(target.density[:, -1], omega.density[:, -1], rtol=0.0, atol=1e-12)


def test_moser_map_pulls_back_target(omega):
    target = pushforward_density(omega, 0.01)
    f = moser_equalize(omega, target)
    assert pullback_residual(f, omega, target) <= TOL_PULLBACK
    assert f.forward_inverse_residual() <= 1e-5


def test_moser_map_keeps_the_boundary(omega):
    f = moser_equalize(omega, pushforward_density(omega, 0.01))
    assert np.max(np.abs(f.forward[0, :, 0])) <= 1e-9
    assert np.max(np.abs(f.forward[-1, :, 0] - 1.0)) <= 1e-9
    assert np.max(np.abs(f.forward[:, 0, 1])) <= 1e-9
    assert np.max(np.abs(f.forward[:, -1, 1] - 1.0)) <= 1e-9


def test_unequal_masses_are_rejected(omega):
    with pytest.raises(UnequalMassError):
        moser_equalize(omega, omega.scaled(1.1))


def test_forms_on_different_grids_are_rejected(omega):
    other = GridForm.uniform(Grid.rectangle((0.0, 1.0, 0.0, 1.0), 65))
    with pytest.raises(ValueError, match="different grids"):
        moser_equalize(omega, other)


def test_folding_shear_is_rejected(omega):
    with pytest.raises(ValueError, match="folds"):
        pushforward_density(omega, -5.0)


def test_perturbation_suite_shrinks_with_amplitude(omega):
    rows = perturbation_suite(omega, [0.04, 0.02, 0.01])
    norms = [row.c0_norm for row in rows]
    deviations = [row.ratio_deviation for row in rows]
    assert norms[0] > norms[1] > norms[2] > 0.0
    assert deviations[0] > deviations[1] > deviations[2]
    assert all(row.pullback_residual <= TOL_PULLBACK for row in rows)


def _bumpy(p):
    return 1.0 + 0.3 * np.sin(np.pi * p[:, 0]) * np.sin(np.pi * p[:, 1])


@pytest.mark.slow
def test_pullback_residual_converges_under_grid_doubling():
    rows = refinement_study(_bumpy, (0.0, 1.0, 0.0, 1.0), [33, 65, 129], 0.02)
    assert [row.nx for row in rows] == [33, 65, 129]
    assert np.isnan(rows[0].order)
    residuals = [row.pullback_residual for row in rows]
    assert residuals == sorted(residuals, reverse=True)
    for row in rows[1:]:
        assert row.order >= REFINEMENT_MIN_ORDER, row
        assert row.converging


def test_refinement_sizes_must_halve_the_spacing():
    with pytest.raises(ValueError, match="does not halve"):
        refinement_study(_bumpy, (0.0, 1.0, 0.0, 1.0), [33, 64], 0.02)
    with pytest.raises(ValueError, match="at least one"):
        refinement_study(_bumpy, (0.0, 1.0, 0.0, 1.0), [], 0.02)
