"""Node-centred rectangle grids and the forms and maps sampled on them."""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import trapezoid
from scipy.interpolate import RectBivariateSpline

from ..hamflow import as_points
from .constants import MIN_GRID

Box = tuple[float, float, float, float]


@dataclass(frozen=True)
class Grid:
    """``nx`` by ``ny`` nodes spanning ``[x0, x1] x [y0, y1]``, both ends included.

    With ``periodic_x`` the chart is an annulus: ``x`` is read modulo ``x1 - x0``.
    """

    x0: float
    x1: float
    y0: float
    y1: float
    nx: int
    ny: int
    periodic_x: bool = False

    def __post_init__(self) -> None:
        if self.nx < MIN_GRID or self.ny < MIN_GRID:
            raise ValueError(f"Grid needs at least {MIN_GRID} nodes per axis, got: {self.shape}")
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError(f"Grid box is empty: {self.box}")

    @classmethod
    def square(cls, n: int, half: float = 1.0) -> Grid:
        """``[-half, half]^2`` with ``n`` nodes per axis."""
        return cls(-half, half, -half, half, n, n)

    @classmethod
    def rectangle(cls, box: Box, nx: int, ny: Optional[int] = None) -> Grid:
        return cls(*box, nx, ny or nx)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nx, self.ny

    @property
    def box(self) -> Box:
        return self.x0, self.x1, self.y0, self.y1

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x0, self.x1, self.nx)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(self.y0, self.y1, self.ny)

    @property
    def hx(self) -> float:
        return (self.x1 - self.x0) / (self.nx - 1)

    @property
    def hy(self) -> float:
        return (self.y1 - self.y0) / (self.ny - 1)

    def nodes(self) -> np.ndarray:
        """Node coordinates, shape ``(nx, ny, 2)``, first index along x."""
        xs, ys = np.meshgrid(self.xs, self.ys, indexing="ij")
        return np.stack([xs, ys], axis=-1)

    def points(self) -> np.ndarray:
        return self.nodes().reshape(-1, 2)

    def sample(self, func: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        """``func`` evaluated on all nodes, reshaped to the grid."""
        values = np.asarray(func(self.points()), dtype=float)
        return values.reshape(self.shape + values.shape[1:])

    def integrate(self, values: np.ndarray) -> float:
        """Trapezoid integral of nodal values over the box."""
        return float(trapezoid(trapezoid(values, dx=self.hx, axis=0), dx=self.hy))

    def reduce(self, points: np.ndarray) -> np.ndarray:
        """Points with ``x`` brought into ``[x0, x1)`` on periodic grids."""
        points = as_points(points).copy()
        if self.periodic_x:
            width = self.x1 - self.x0
            points[:, 0] = self.x0 + np.mod(points[:, 0] - self.x0, width)
        return points

    def spline(self, values: np.ndarray) -> RectBivariateSpline:
        return RectBivariateSpline(self.xs, self.ys, values, kx=3, ky=3)


def in_box(points: np.ndarray, box: Optional[Box]) -> np.ndarray:
    """Mask of points in the closed box; all false for an empty box."""
    points = as_points(points)
    if box is None:
        return np.zeros(len(points), dtype=bool)
    x0, x1, y0, y1 = box
    x, y = points[:, 0], points[:, 1]
    return (x >= x0) & (x <= x1) & (y >= y0) & (y <= y1)


@dataclass(frozen=True, eq=False)
class GridForm:
    """Area form ``density * dx ^ dy`` sampled on a grid, with bicubic interpolation."""

    grid: Grid
    density: np.ndarray
    total: float = field(init=False)
    _spline: RectBivariateSpline = field(init=False, repr=False)

    def __post_init__(self) -> None:
        density = np.asarray(self.density, dtype=float)
        if density.shape != self.grid.shape:
            raise ValueError(f"Density shape {density.shape} does not match {self.grid.shape}")
        if not np.all(density > 0):
            raise ValueError(f"Area form density must be positive, minimum: {density.min()}")
        object.__setattr__(self, "density", density)
        object.__setattr__(self, "total", self.grid.integrate(density))
        object.__setattr__(self, "_spline", self.grid.spline(density))

    @classmethod
    def from_function(cls, grid: Grid, func: Callable[[np.ndarray], np.ndarray]) -> GridForm:
        return cls(grid, grid.sample(func))

    @classmethod
    def uniform(cls, grid: Grid) -> GridForm:
        return cls(grid, np.ones(grid.shape))

    def __call__(self, points: np.ndarray) -> np.ndarray:
        points = self.grid.reduce(points)
        return self._spline.ev(points[:, 0], points[:, 1])

    def scaled(self, factor: float) -> GridForm:
        return GridForm(self.grid, self.density * factor)


@dataclass(frozen=True, eq=False)
class OneForm:
    """``sx dx + sy dy`` sampled on a grid."""

    grid: Grid
    sx: np.ndarray
    sy: np.ndarray

    def __post_init__(self) -> None:
        for name in ("sx", "sy"):
            values = np.asarray(getattr(self, name), dtype=float)
            if values.shape != self.grid.shape:
                raise ValueError(f"{name} shape {values.shape} does not match {self.grid.shape}")
            object.__setattr__(self, name, values)

    @classmethod
    def zero(cls, grid: Grid) -> OneForm:
        return cls(grid, np.zeros(grid.shape), np.zeros(grid.shape))

    def is_zero(self) -> bool:
        return not (np.any(self.sx) or np.any(self.sy))

    def norm(self) -> float:
        """Largest nodal length of the form."""
        return float(np.max(np.hypot(self.sx, self.sy)))

    def __call__(self, points: np.ndarray) -> np.ndarray:
        points = self.grid.reduce(points)
        x, y = points[:, 0], points[:, 1]
        sx, sy = self.grid.spline(self.sx), self.grid.spline(self.sy)
        return np.column_stack([sx.ev(x, y), sy.ev(x, y)])


@dataclass(frozen=True, eq=False)
class GridDiffeo:
    """Diffeomorphism sampled on grid nodes, the exact identity outside ``support``.

    ``forward`` and ``backward`` hold node images under the map and its
    inverse, shape ``(nx, ny, 2)``. Off-node values interpolate the
    displacement bicubically. ``support`` is a closed box, or ``None`` for
    the identity.
    """

    grid: Grid
    forward: np.ndarray
    backward: np.ndarray
    support: Optional[Box] = None
    _splines: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nodes = self.grid.nodes()
        splines = []
        for name in ("forward", "backward"):
            values = np.asarray(getattr(self, name), dtype=float)
            if values.shape != nodes.shape:
                raise ValueError(f"{name} shape {values.shape} does not match {nodes.shape}")
            object.__setattr__(self, name, values)
            shift = values - nodes
            splines.append((self.grid.spline(shift[..., 0]), self.grid.spline(shift[..., 1])))
        object.__setattr__(self, "_splines", tuple(splines))

    @classmethod
    def identity(cls, grid: Grid) -> GridDiffeo:
        nodes = grid.nodes()
        return cls(grid, nodes, nodes.copy(), None)

    @property
    def is_identity(self) -> bool:
        return self.support is None

    def _apply(self, points: np.ndarray, which: int) -> np.ndarray:
        points = as_points(points)
        images = np.array(points, dtype=float)
        mask = in_box(points, self.support)
        if np.any(mask):
            local = self.grid.reduce(points[mask])
            sx, sy = self._splines[which]
            images[mask, 0] += sx.ev(local[:, 0], local[:, 1])
            images[mask, 1] += sy.ev(local[:, 0], local[:, 1])
        return images

    def __call__(self, points: np.ndarray) -> np.ndarray:
        images = self._apply(points, 0)
        return images[0] if np.ndim(points) == 1 else images

    def inverse(self) -> GridDiffeo:
        return GridDiffeo(self.grid, self.backward, self.forward, self.support)

    def displacement(self) -> np.ndarray:
        return self.forward - self.grid.nodes()

    def c0_norm(self) -> float:
        """Largest nodal displacement."""
        shift = self.displacement()
        return float(np.max(np.hypot(shift[..., 0], shift[..., 1])))

    def forward_inverse_residual(self) -> float:
        """Largest ``|inverse(forward(x)) - x|`` over the nodes."""
        nodes = self.grid.points()
        images = self.forward.reshape(-1, 2)
        back = self._apply(images, 1)
        return float(np.max(np.hypot(*(back - nodes).T)))

    def jacobian_det(self, points: np.ndarray) -> np.ndarray:
        """Determinant of the interpolated map's Jacobian."""
        points = as_points(points)
        det = np.ones(len(points))
        mask = in_box(points, self.support)
        if np.any(mask):
            local = self.grid.reduce(points[mask])
            x, y = local[:, 0], local[:, 1]
            sx, sy = self._splines[0]
            a = 1.0 + sx.ev(x, y, dx=1)
            b = sx.ev(x, y, dy=1)
            c = sy.ev(x, y, dx=1)
            d = 1.0 + sy.ev(x, y, dy=1)
            det[mask] = a * d - b * c
        return det


def support_box(grid: Grid, moved: np.ndarray, pad: int = 1) -> Optional[Box]:
    """Smallest node box, padded by ``pad`` nodes, holding every ``moved`` node."""
    if not np.any(moved):
        return None
    ix, iy = np.nonzero(moved)
    xs, ys = grid.xs, grid.ys
    return (
        float(xs[max(ix.min() - pad, 0)]),
        float(xs[min(ix.max() + pad, grid.nx - 1)]),
        float(ys[max(iy.min() - pad, 0)]),
        float(ys[min(iy.max() + pad, grid.ny - 1)]),
    )


VectorField = Callable[[np.ndarray, float], np.ndarray]


def rk4_flow(
    velocity: VectorField, points: np.ndarray, t0: float, t1: float, steps: int
) -> np.ndarray:
    """Classical RK4 for ``dx/dt = velocity(x, t)`` from ``t0`` to ``t1``.

    ``t1 < t0`` integrates backward, which gives the inverse map.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got: {steps}")
    x = np.array(points, dtype=float)
    h = (t1 - t0) / steps
    for k in range(steps):
        t = t0 + k * h
        k1 = velocity(x, t)
        k2 = velocity(x + 0.5 * h * k1, t + 0.5 * h)
        k3 = velocity(x + 0.5 * h * k2, t + 0.5 * h)
        k4 = velocity(x + h * k3, t + h)
        x = x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return x
