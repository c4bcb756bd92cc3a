"""Density correction along a horizontal skeleton edge."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import BetaNotOneError
from ..hamflow import cutoff
from .constants import BETA_TOL, SKELETON_STEPS
from .grid import Grid, GridDiffeo, GridForm, rk4_flow


@dataclass(frozen=True)
class Edge:
    """Horizontal segment ``[x_start, x_end] x {y}``."""

    y: float
    x_start: float
    x_end: float

    def __post_init__(self) -> None:
        if self.x_end <= self.x_start:
            raise ValueError(f"Edge must run left to right: {self}")

    def row(self, grid: Grid) -> int:
        """Index of the grid row the edge is snapped to."""
        j = int(np.rint((self.y - grid.y0) / grid.hy))
        if not 0 <= j < grid.ny:
            raise ValueError(f"Edge at y={self.y} is outside the grid {grid.box}")
        return j

    def columns(self, grid: Grid) -> np.ndarray:
        xs = grid.xs
        return (xs >= self.x_start) & (xs <= self.x_end)


def _log_beta(big: GridForm, omega: GridForm, edge: Edge, delta: float) -> np.ndarray:
    """``log(Omega / omega)`` along the edge row, zero off the edge."""
    grid = omega.grid
    j = edge.row(grid)
    on_edge = edge.columns(grid)
    beta = big.density[:, j] / omega.density[:, j]
    xs = grid.xs
    ends = on_edge & ((xs <= edge.x_start + delta) | (xs >= edge.x_end - delta))
    if np.any(ends):
        worst = float(np.max(np.abs(beta[ends] - 1.0)))
        if worst > BETA_TOL:
            raise BetaNotOneError(
                f"Density ratio differs from 1 by {worst:.3g} within {delta} of the edge ends"
            )
    return np.where(on_edge, np.log(beta), 0.0)


def skeleton_adjust(
    big: GridForm,
    omega: GridForm,
    edge: Edge,
    delta: float,
    steps: int = SKELETON_STEPS,
) -> GridDiffeo:
    """A map ``h`` with ``h* Omega = omega`` on ``edge``, supported near it.

    ``h`` is the time-1 flow of ``-chi(u) log(beta(x)) u d/du`` with
    ``u = y - y_edge``, ``beta = Omega / omega`` on the edge and ``chi``
    equal to 1 on ``|u| <= delta / 3`` and to 0 on ``|u| >= 2 delta / 3``.
    Columns flow independently; the inverse flows backward.

    Raises
    ------
    BetaNotOneError
        If ``Omega`` and ``omega`` differ within ``delta`` of the edge ends.
    """
    if big.grid != omega.grid:
        raise ValueError("Omega and omega live on different grids")
    if delta <= 0.0:
        raise ValueError(f"delta must be positive, got: {delta}")
    grid = omega.grid
    log_beta = _log_beta(big, omega, edge, delta)
    if not np.any(log_beta):
        return GridDiffeo.identity(grid)

    y_edge = grid.ys[edge.row(grid)]
    u = (grid.nodes()[..., 1] - y_edge).reshape(-1, 1)
    rate = np.repeat(log_beta, grid.ny).reshape(-1, 1)

    def velocity(points: np.ndarray, t: float) -> np.ndarray:
        return -cutoff(points, delta / 3.0, 2.0 * delta / 3.0) * rate * points

    shape = grid.shape
    forward, backward = grid.nodes(), grid.nodes()
    forward[..., 1] = y_edge + rk4_flow(velocity, u, 0.0, 1.0, steps).reshape(shape)
    backward[..., 1] = y_edge + rk4_flow(velocity, u, 1.0, 0.0, steps).reshape(shape)
    support = (
        max(edge.x_start, grid.x0),
        min(edge.x_end, grid.x1),
        max(y_edge - delta, grid.y0),
        min(y_edge + delta, grid.y1),
    )
    h = GridDiffeo(grid, forward, backward, support)
    logging.getLogger().debug(
        f"Skeleton edge y={y_edge:.4g}: max |log beta| {np.abs(log_beta).max():.3g}, "
        f"C0 {h.c0_norm():.3g}"
    )
    return h


def edge_residual(h: GridDiffeo, big: GridForm, omega: GridForm, edge: Edge) -> float:
    """``max |Omega(h(p)) det Dh(p) - omega(p)|`` over edge nodes."""
    grid = omega.grid
    j = edge.row(grid)
    on_edge = edge.columns(grid)
    points = grid.nodes()[on_edge, j]
    pulled = big(h(points)) * h.jacobian_det(points)
    return float(np.max(np.abs(pulled - omega.density[on_edge, j])))
