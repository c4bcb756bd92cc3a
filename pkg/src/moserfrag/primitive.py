"""Explicit primitives of 2-forms on rectangles.

The discrete exterior derivative of ``sigma`` on a cell is its trapezoid
circulation around the cell divided by the cell area. All constructions
below are exact for it against the four-node cell average of ``eta``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid

from ..errors import NonzeroTotalMassError
from ..hamflow import cutoff
from .constants import MIN_GRID, PRIMITIVE_MARGIN, TOL_MASS
from .grid import Grid, OneForm
from .types import BoundaryMode


@dataclass(frozen=True)
class Skeleton:
    """Rectilinear partition of a rectangle by vertical and horizontal lines.

    Lines are snapped to the nearest grid nodes.
    """

    x_lines: tuple[float, ...] = field(default_factory=tuple)
    y_lines: tuple[float, ...] = field(default_factory=tuple)

    def breaks(self, grid: Grid) -> tuple[np.ndarray, np.ndarray]:
        """Node indices of the cell boundaries along x and y, ends included."""
        ix = np.rint((np.asarray(self.x_lines, dtype=float) - grid.x0) / grid.hx).astype(int)
        iy = np.rint((np.asarray(self.y_lines, dtype=float) - grid.y0) / grid.hy).astype(int)
        bx = np.unique(np.concatenate([[0], ix, [grid.nx - 1]]))
        by = np.unique(np.concatenate([[0], iy, [grid.ny - 1]]))
        if bx.min() < 0 or bx.max() > grid.nx - 1 or by.min() < 0 or by.max() > grid.ny - 1:
            raise ValueError(f"Skeleton lines leave the grid box {grid.box}: {self}")
        if np.any(np.diff(bx) < MIN_GRID - 1) or np.any(np.diff(by) < MIN_GRID - 1):
            raise ValueError(f"Skeleton cells need at least {MIN_GRID} nodes per side: {self}")
        return bx, by

    def node_mask(self, grid: Grid) -> np.ndarray:
        """Nodes lying on a skeleton line or on the rectangle boundary."""
        bx, by = self.breaks(grid)
        mask = np.zeros(grid.shape, dtype=bool)
        mask[bx, :] = True
        mask[:, by] = True
        return mask


def cell_average(values: np.ndarray) -> np.ndarray:
    """Mean of the four corner values of every cell."""
    return 0.25 * (values[:-1, :-1] + values[1:, :-1] + values[:-1, 1:] + values[1:, 1:])


def discrete_exterior_derivative(sigma: OneForm) -> np.ndarray:
    """Cell circulation of ``sigma`` over cell area, shape ``(nx - 1, ny - 1)``."""
    grid = sigma.grid
    sx, sy = sigma.sx, sigma.sy
    bottom = 0.5 * (sx[:-1, :-1] + sx[1:, :-1]) * grid.hx
    top = 0.5 * (sx[:-1, 1:] + sx[1:, 1:]) * grid.hx
    left = 0.5 * (sy[:-1, :-1] + sy[:-1, 1:]) * grid.hy
    right = 0.5 * (sy[1:, :-1] + sy[1:, 1:]) * grid.hy
    return (bottom + right - top - left) / (grid.hx * grid.hy)


def primitive_residual(sigma: OneForm, eta: np.ndarray) -> float:
    """Largest cellwise gap between ``d sigma`` and the cell average of ``eta``."""
    return float(np.max(np.abs(discrete_exterior_derivative(sigma) - cell_average(eta))))


def c0_ratio(sigma: OneForm, eta: np.ndarray) -> float:
    """``|sigma| / (|eta| diam)``; zero when ``eta`` vanishes."""
    scale = float(np.max(np.abs(eta)))
    if scale == 0.0:
        return 0.0
    grid = sigma.grid
    diam = float(np.hypot(grid.x1 - grid.x0, grid.y1 - grid.y0))
    return sigma.norm() / (scale * diam)


def _row_primitive(eta: np.ndarray, hx: float) -> np.ndarray:
    return cumulative_trapezoid(eta, dx=hx, axis=0, initial=0.0)


def _absorbing_profile(n: int, h: float) -> np.ndarray:
    """Smooth profile on ``n`` nodes, zero outside the middle, with trapezoid sum 1."""
    u = np.linspace(-0.5, 0.5, n)
    half = 0.5 - PRIMITIVE_MARGIN
    profile = cutoff(u, 0.5 * half, half)
    return profile / trapezoid(profile, dx=h)


def _block_primitive(
    eta: np.ndarray, hx: float, hy: float, tol: float, label: str
) -> tuple[np.ndarray, np.ndarray]:
    """Primitive whose tangential part vanishes on the block boundary."""
    row_mass = trapezoid(eta, dx=hx, axis=0)
    total = trapezoid(row_mass, dx=hy)
    scale = max(1.0, float(trapezoid(trapezoid(np.abs(eta), dx=hx, axis=0), dx=hy)))
    if abs(total) > tol * scale:
        raise NonzeroTotalMassError(f"Total mass {total:.3g} of {label} is not zero")

    phi = _absorbing_profile(eta.shape[0], hx)
    balanced = eta - np.outer(phi, row_mass)
    sy = _row_primitive(balanced, hx)
    sy[-1, :] = 0.0
    column = cumulative_trapezoid(row_mass, dx=hy, initial=0.0)
    sx = -np.outer(phi, column)
    return sx, sy


def primitive_on_rectangle(
    eta: np.ndarray,
    grid: Grid,
    mode: BoundaryMode = BoundaryMode.FREE,
    skeleton: Optional[Skeleton] = None,
    tol: float = TOL_MASS,
) -> OneForm:
    """A 1-form ``sigma`` with discrete ``d sigma = eta``.

    Parameters
    ----------
    eta : np.ndarray
        Nodal density of the 2-form, shape ``grid.shape``.
    mode : BoundaryMode
        ``FREE`` integrates rows from the left side (``sx = 0``).
        ``VANISH_NEAR_BOUNDARY`` additionally makes the tangential part
        vanish on the boundary, and ``sigma`` vanish wherever ``eta`` does
        in a collar narrower than ``PRIMITIVE_MARGIN`` of the side.
        ``VANISH_ON_SKELETON`` does the same on every cell of ``skeleton``.

    Raises
    ------
    NonzeroTotalMassError
        In the vanishing modes, if ``eta`` does not integrate to zero over
        the rectangle or over some skeleton cell.
    """
    eta = np.asarray(eta, dtype=float)
    if eta.shape != grid.shape:
        raise ValueError(f"eta shape {eta.shape} does not match grid {grid.shape}")
    mode = BoundaryMode(mode)
    if not np.any(eta):
        return OneForm.zero(grid)

    if mode is BoundaryMode.FREE:
        return OneForm(grid, np.zeros(grid.shape), _row_primitive(eta, grid.hx))
    if mode is BoundaryMode.VANISH_NEAR_BOUNDARY:
        sx, sy = _block_primitive(eta, grid.hx, grid.hy, tol, "the rectangle")
        return OneForm(grid, sx, sy)

    if skeleton is None:
        raise ValueError(f"Boundary mode '{mode.value}' needs a skeleton")
    bx, by = skeleton.breaks(grid)
    xs, ys = grid.xs, grid.ys
    sx, sy = np.zeros(grid.shape), np.zeros(grid.shape)
    for i0, i1 in zip(bx[:-1], bx[1:]):
        for j0, j1 in zip(by[:-1], by[1:]):
            label = f"cell [{xs[i0]:.4g}, {xs[i1]:.4g}] x [{ys[j0]:.4g}, {ys[j1]:.4g}]"
            block = np.s_[i0 : i1 + 1, j0 : j1 + 1]
            sx[block], sy[block] = _block_primitive(eta[block], grid.hx, grid.hy, tol, label)
    logging.getLogger().debug(f"Skeleton primitive over {(len(bx) - 1) * (len(by) - 1)} cells")
    return OneForm(grid, sx, sy)


def tangential_on_skeleton(sigma: OneForm, skeleton: Skeleton) -> float:
    """Largest tangential component of ``sigma`` along the skeleton lines and the boundary."""
    bx, by = skeleton.breaks(sigma.grid)
    vertical = np.abs(sigma.sy[bx, :]).max()
    horizontal = np.abs(sigma.sx[:, by]).max()
    return float(max(vertical, horizontal))
