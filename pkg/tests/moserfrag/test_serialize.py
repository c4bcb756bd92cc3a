import numpy as np
import pytest

from src.moserfrag import (
    Grid,
    GridDiffeo,
    GridForm,
    OneForm,
    export_csv,
    read_grid,
    write_grid,
)


@pytest.fixture
def grid():
    return Grid(0.0, 1.0, -1.0, 1.0, 9, 7, periodic_x=True)


def test_form_file_restores_density_and_grid(tmp_path, grid):
    form = GridForm.from_function(grid, lambda p: 2.0 + p[:, 0] * p[:, 1])
    path = write_grid(form, tmp_path / "forms" / "omega.grid")
    restored = read_grid(path)
    assert isinstance(restored, GridForm)
    assert restored.grid == grid
    assert np.array_equal(restored.density, form.density)


def test_diffeo_file_keeps_support(tmp_path, grid):
    nodes = grid.nodes()
    shifted = nodes.copy()
    shifted[2:5, 2:4, 1] += 0.01
    back = nodes.copy()
    back[2:5, 2:4, 1] -= 0.01
    diffeo = GridDiffeo(grid, shifted, back, (0.125, 0.625, -0.5, 0.5))
    restored = read_grid(write_grid(diffeo, tmp_path / "psi.grid"))
    assert restored.support == diffeo.support
    assert np.array_equal(restored.forward, shifted)
    assert np.array_equal(restored.backward, back)
    assert read_grid(write_grid(GridDiffeo.identity(grid), tmp_path / "id.grid")).is_identity


def test_truncated_file_is_rejected(tmp_path, grid):
    path = write_grid(OneForm.zero(grid), tmp_path / "sigma.grid")
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(ValueError, match="bytes"):
        read_grid(path)


def test_foreign_file_is_rejected(tmp_path):
    path = tmp_path / "notes.grid"
    path.write_bytes(b"not a grid at all")
    with pytest.raises(ValueError, match="magic"):
        read_grid(path)


def test_csv_has_one_row_per_node(tmp_path, grid):
    path = export_csv(OneForm.zero(grid), tmp_path / "sigma.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == "x,y,sx,sy"
    assert len(lines) == 1 + grid.nx * grid.ny
