"""Binary and CSV dumps of grid forms and grid maps.

Binary layout, little endian::

    magic     8 bytes  b"QMCGRID1"
    kind      int32    GridKind
    nx, ny    int32
    n_fields  int32
    periodic  int32    1 if x is periodic
    box       4 x float64  x0, x1, y0, y1
    support   4 x float64  NaN when the map has empty support
    payload   n_fields x nx x ny float64, row-major
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

import numpy as np

from .constants import GRID_MAGIC
from .grid import Grid, GridDiffeo, GridForm, OneForm
from .types import GridKind

GridObject = Union[GridForm, OneForm, GridDiffeo]

_INTS = np.dtype("<i4")
_FLOATS = np.dtype("<f8")
_HEADER_INTS = 5
_HEADER_SIZE = len(GRID_MAGIC) + _HEADER_INTS * _INTS.itemsize + 8 * _FLOATS.itemsize


def _fields(obj: GridObject) -> tuple[GridKind, list[np.ndarray], tuple[str, ...]]:
    if isinstance(obj, GridForm):
        return GridKind.FORM, [obj.density], ("density",)
    if isinstance(obj, OneForm):
        return GridKind.ONE_FORM, [obj.sx, obj.sy], ("sx", "sy")
    if isinstance(obj, GridDiffeo):
        return (
            GridKind.DIFFEO,
            [obj.forward[..., 0], obj.forward[..., 1], obj.backward[..., 0], obj.backward[..., 1]],
            ("fx", "fy", "bx", "by"),
        )
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def write_grid(obj: GridObject, path: str | Path) -> Path:
    """Write ``obj`` in the binary grid format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    kind, fields, _ = _fields(obj)
    grid = obj.grid
    support = getattr(obj, "support", None)
    header_ints = np.array(
        [int(kind), grid.nx, grid.ny, len(fields), int(grid.periodic_x)], dtype=_INTS
    )
    header_floats = np.array(
        list(grid.box) + list(support if support is not None else [np.nan] * 4), dtype=_FLOATS
    )
    with open(path, "wb") as f:
        f.write(GRID_MAGIC)
        f.write(header_ints.tobytes())
        f.write(header_floats.tobytes())
        f.write(np.stack(fields).astype(_FLOATS).tobytes(order="C"))
    logging.getLogger().debug(f"Wrote {kind.name} grid {grid.shape} to {path}")
    return path


def read_grid(path: str | Path) -> GridObject:
    """Read an object written by ``write_grid``.

    Raises
    ------
    ValueError
        If the file is not a grid dump or its payload is truncated.
    """
    data = Path(path).read_bytes()
    if not data.startswith(GRID_MAGIC):
        raise ValueError(f"Not a grid file (bad magic): {path}")
    offset = len(GRID_MAGIC)
    ints = np.frombuffer(data, dtype=_INTS, count=_HEADER_INTS, offset=offset)
    offset += _HEADER_INTS * _INTS.itemsize
    floats = np.frombuffer(data, dtype=_FLOATS, count=8, offset=offset)
    kind, nx, ny, n_fields, periodic = (int(v) for v in ints)
    expected = _HEADER_SIZE + n_fields * nx * ny * _FLOATS.itemsize
    if len(data) != expected:
        raise ValueError(f"Grid file {path} has {len(data)} bytes, expected {expected}")

    grid = Grid(*(float(v) for v in floats[:4]), nx, ny, periodic_x=bool(periodic))
    payload = np.frombuffer(data, dtype=_FLOATS, offset=_HEADER_SIZE).reshape(n_fields, nx, ny)
    payload = payload.copy()
    kind = GridKind(kind)
    if kind is GridKind.FORM:
        return GridForm(grid, payload[0])
    if kind is GridKind.ONE_FORM:
        return OneForm(grid, payload[0], payload[1])
    support = None if np.isnan(floats[4]) else tuple(float(v) for v in floats[4:])
    forward = np.stack([payload[0], payload[1]], axis=-1)
    backward = np.stack([payload[2], payload[3]], axis=-1)
    return GridDiffeo(grid, forward, backward, support)


def export_csv(obj: GridObject, path: str | Path) -> Path:
    """One row per node: ``x, y`` and the object's fields, for plotting."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    _, fields, names = _fields(obj)
    columns = [obj.grid.points()] + [f.reshape(-1, 1) for f in fields]
    header = ",".join(("x", "y") + names)
    np.savetxt(path, np.hstack(columns), delimiter=",", header=header, comments="")
    return path
