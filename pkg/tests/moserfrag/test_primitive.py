import numpy as np
import pytest

from src.errors import NonzeroTotalMassError
from src.moserfrag import (
    BoundaryMode,
    Grid,
    Skeleton,
    c0_ratio,
    primitive_on_rectangle,
    primitive_residual,
    tangential_on_skeleton,
)


@pytest.fixture
def grid():
    return Grid.square(65)


def odd_bump(points):
    x, y = points[:, 0], points[:, 1]
    r2 = x**2 + y**2
    return np.where(r2 < 0.16, x * (0.16 - r2) ** 2, 0.0)


def checkerboard(points):
    return np.sin(2 * np.pi * points[:, 0]) * np.sin(2 * np.pi * points[:, 1])


def test_zero_form_has_zero_primitive(grid):
    sigma = primitive_on_rectangle(np.zeros(grid.shape), grid, BoundaryMode.VANISH_NEAR_BOUNDARY)
    assert sigma.is_zero()


def test_free_primitive_integrates_rows(grid):
    eta = grid.sample(lambda p: 1.0 + p[:, 0] * p[:, 1])
    sigma = primitive_on_rectangle(eta, grid, BoundaryMode.FREE)
    assert not np.any(sigma.sx)
    assert np.all(sigma.sy[0] == 0.0)
    assert primitive_residual(sigma, eta) <= 1e-10
    assert c0_ratio(sigma, eta) <= 1.0


def test_near_boundary_primitive_vanishes_in_collar(grid):
    eta = grid.sample(odd_bump)
    sigma = primitive_on_rectangle(eta, grid, BoundaryMode.VANISH_NEAR_BOUNDARY)
    assert primitive_residual(sigma, eta) <= 1e-10

    nodes = grid.nodes()
    collar = (np.abs(nodes[..., 0]) > 0.5) | (np.abs(nodes[..., 1]) > 0.5)
    assert np.max(np.abs(sigma.sx[collar])) <= 1e-12
    assert np.max(np.abs(sigma.sy[collar])) <= 1e-12


def test_near_boundary_primitive_needs_zero_mass(grid):
    with pytest.raises(NonzeroTotalMassError, match="rectangle"):
        primitive_on_rectangle(np.ones(grid.shape), grid, BoundaryMode.VANISH_NEAR_BOUNDARY)


def test_skeleton_primitive_is_tangentially_zero_on_lines(grid):
    skeleton = Skeleton(x_lines=(0.0,), y_lines=(0.0,))
    eta = grid.sample(checkerboard)
    sigma = primitive_on_rectangle(eta, grid, BoundaryMode.VANISH_ON_SKELETON, skeleton)
    assert primitive_residual(sigma, eta) <= 1e-10
    assert tangential_on_skeleton(sigma, skeleton) <= 1e-12


def test_skeleton_primitive_names_the_loaded_cell(grid):
    skeleton = Skeleton(x_lines=(0.0,))
    eta = grid.sample(lambda p: np.where(p[:, 0] > 0.0, checkerboard(p) + 0.5, checkerboard(p)))
    with pytest.raises(NonzeroTotalMassError, match=r"cell \[0, 1\]"):
        primitive_on_rectangle(eta, grid, BoundaryMode.VANISH_ON_SKELETON, skeleton)


def test_skeleton_mode_requires_skeleton(grid):
    eta = grid.sample(checkerboard)
    with pytest.raises(ValueError, match="skeleton"):
        primitive_on_rectangle(eta, grid, BoundaryMode.VANISH_ON_SKELETON)


def test_skeleton_rejects_tiny_cells(grid):
    with pytest.raises(ValueError, match="nodes per side"):
        Skeleton(x_lines=(0.95,)).breaks(grid)


def test_c0_ratio_of_zero_form_is_zero(grid):
    sigma = primitive_on_rectangle(np.zeros(grid.shape), grid)
    assert c0_ratio(sigma, np.zeros(grid.shape)) == 0.0
