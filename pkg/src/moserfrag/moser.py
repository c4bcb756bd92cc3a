"""Moser equalization of area forms on a rectangle."""
from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DegenerateInterpolantError, UnequalMassError
from ..hamflow import cutoff, cutoff_derivative
from .constants import MOSER_STEPS, REFINEMENT_MIN_ORDER, SHEAR_REACH, TOL_MASS
from .grid import Grid, GridDiffeo, GridForm, in_box, rk4_flow, support_box
from .primitive import Skeleton, primitive_on_rectangle
from .types import BoundaryMode


def _check_grids(omega1: GridForm, omega2: GridForm) -> Grid:
    if omega1.grid != omega2.grid:
        raise ValueError(f"Forms live on different grids: {omega1.grid} and {omega2.grid}")
    return omega1.grid


def _matched_density(omega1: GridForm, omega2: GridForm, tol: float) -> np.ndarray:
    """``omega2``'s density rescaled to the discrete mass of ``omega1``."""
    mismatch = abs(omega2.total - omega1.total) / omega1.total
    if mismatch > tol:
        raise UnequalMassError(
            f"Masses differ by {mismatch:.3g} (relative): {omega1.total:.6g} vs {omega2.total:.6g}"
        )
    return omega2.density * (omega1.total / omega2.total)


def _check_interpolant(grid: Grid, rho1: np.ndarray, rho2: np.ndarray) -> None:
    """Both densities, hence every convex combination, stay positive between nodes."""
    xs, ys = grid.xs, grid.ys
    mx, my = 0.5 * (xs[:-1] + xs[1:]), 0.5 * (ys[:-1] + ys[1:])
    for rho in (rho1, rho2):
        low = float(grid.spline(rho)(mx, my).min())
        if low <= 0.0:
            raise DegenerateInterpolantError(f"Interpolated density reaches {low:.3g} <= 0")


def moser_equalize(
    omega1: GridForm,
    omega2: GridForm,
    mode: BoundaryMode = BoundaryMode.VANISH_NEAR_BOUNDARY,
    skeleton: Optional[Skeleton] = None,
    steps: int = MOSER_STEPS,
    tol_mass: float = TOL_MASS,
) -> GridDiffeo:
    """A map ``f`` with ``f* omega2 = omega1``.

    ``f`` is the time-1 flow of ``X_t = (-sy, sx) / rho_t`` where ``d sigma
    = rho2 - rho1`` and ``rho_t = rho1 + t (rho2 - rho1)``. ``omega2`` is
    first rescaled to the discrete mass of ``omega1``.

    Raises
    ------
    UnequalMassError
        If the relative mass mismatch exceeds ``tol_mass``.
    DegenerateInterpolantError
        If an interpolated density is not positive.
    NonzeroTotalMassError
        In the vanishing modes, if a skeleton cell carries net mass.
    """
    grid = _check_grids(omega1, omega2)
    rho1 = omega1.density
    rho2 = _matched_density(omega1, omega2, tol_mass)
    _check_interpolant(grid, rho1, rho2)

    eta = rho2 - rho1
    if not np.any(eta):
        return GridDiffeo.identity(grid)
    sigma = primitive_on_rectangle(eta, grid, mode, skeleton)

    splines = [grid.spline(values) for values in (sigma.sx, sigma.sy, rho1, eta)]
    low = np.array([grid.x0, grid.y0])
    high = np.array([grid.x1, grid.y1])

    def velocity(points: np.ndarray, t: float) -> np.ndarray:
        p = np.clip(points, low, high)
        sx, sy, r1, d = (s.ev(p[:, 0], p[:, 1]) for s in splines)
        rho_t = r1 + t * d
        return np.column_stack([-sy, sx]) / rho_t[:, None]

    nodes = grid.points()
    forward = rk4_flow(velocity, nodes, 0.0, 1.0, steps).reshape(grid.nodes().shape)
    backward = rk4_flow(velocity, nodes, 1.0, 0.0, steps).reshape(grid.nodes().shape)
    nodes = grid.nodes()
    moved = np.any(forward != nodes, axis=-1) | np.any(backward != nodes, axis=-1)
    f = GridDiffeo(grid, forward, backward, support_box(grid, moved))

    logging.getLogger().debug(
        f"Moser flow on {grid.shape}: |sigma| {sigma.norm():.3g}, C0 {f.c0_norm():.3g}"
    )
    return f


def pullback_residual(f: GridDiffeo, omega1: GridForm, omega2: GridForm) -> float:
    """``max |rho2(f(x)) det Df(x) - rho1(x)|`` over interior nodes mapped into the box.

    ``omega2`` is rescaled to the mass of ``omega1`` as in ``moser_equalize``.
    """
    grid = _check_grids(omega1, omega2)
    factor = omega1.total / omega2.total
    nodes = grid.nodes()[1:-1, 1:-1].reshape(-1, 2)
    rho1 = omega1.density[1:-1, 1:-1].reshape(-1)
    images = f(nodes)
    inside = in_box(images, grid.box)
    pulled = factor * omega2(images[inside]) * f.jacobian_det(nodes[inside])
    return float(np.max(np.abs(pulled - rho1[inside])))


def pushforward_density(omega: GridForm, amplitude: float) -> GridForm:
    """Push ``omega`` forward by the horizontal shear ``(x + a b(x) c(y), y)``.

    ``b`` and ``c`` are smooth bumps centred in the rectangle and reaching
    ``SHEAR_REACH`` of its sides, so the result equals ``omega`` near the
    boundary and row masses are preserved.

    Raises
    ------
    ValueError
        If the shear is not monotone in ``x`` for this amplitude.
    """
    grid = omega.grid
    mx, my = 0.5 * (grid.x0 + grid.x1), 0.5 * (grid.y0 + grid.y1)
    rx, ry = SHEAR_REACH * (grid.x1 - grid.x0), SHEAR_REACH * (grid.y1 - grid.y0)

    def b(x):
        return cutoff(x - mx, 0.0, rx)

    def db(x):
        return cutoff_derivative(x - mx, 0.0, rx)

    xs, ys = grid.xs, grid.ys
    fine = np.linspace(grid.x0, grid.x1, 8 * grid.nx)
    if 1.0 + float(np.min(amplitude * db(fine))) <= 0.0:
        raise ValueError(f"Shear amplitude {amplitude} folds the rectangle")

    density = np.empty(grid.shape)
    for j, y in enumerate(ys):
        c = float(cutoff(y - my, 0.0, ry))
        preimage = np.interp(xs, fine + amplitude * b(fine) * c, fine)
        source = np.column_stack([preimage, np.full_like(xs, y)])
        density[:, j] = omega(source) / (1.0 + amplitude * db(preimage) * c)
    return GridForm(grid, density)


@dataclass(frozen=True)
class PerturbationRow:
    amplitude: float
    ratio_deviation: float
    c0_norm: float
    pullback_residual: float


def perturbation_suite(
    omega: GridForm,
    amplitudes: Sequence[float],
    mode: BoundaryMode = BoundaryMode.VANISH_NEAR_BOUNDARY,
    steps: int = MOSER_STEPS,
) -> list[PerturbationRow]:
    """Equalize ``omega`` against shear pushforwards of shrinking amplitude.

    Rows report ``max |omega2 / omega - 1|``, the C0 norm of the Moser map
    and its pullback residual, in the order given.
    """
    rows = []
    for amplitude in amplitudes:
        target = pushforward_density(omega, amplitude)
        f = moser_equalize(omega, target, mode, steps=steps)
        deviation = float(np.max(np.abs(target.density / omega.density - 1.0)))
        residual = pullback_residual(f, omega, target)
        rows.append(PerturbationRow(float(amplitude), deviation, f.c0_norm(), residual))
        logging.getLogger().info(
            f"Moser amplitude {amplitude:g}: deviation {deviation:.3g}, "
            f"C0 {rows[-1].c0_norm:.3g}, residual {residual:.3g}"
        )
    return rows


@dataclass(frozen=True)
class RefinementRow:
    nx: int
    pullback_residual: float
    order: float

    @property
    def converging(self) -> bool:
        """``order`` reaches ``REFINEMENT_MIN_ORDER``; the first row has no order."""
        return math.isnan(self.order) or self.order >= REFINEMENT_MIN_ORDER


def refinement_study(
    density: Callable[[np.ndarray], np.ndarray],
    box: tuple[float, float, float, float],
    sizes: Sequence[int],
    amplitude: float,
    mode: BoundaryMode = BoundaryMode.VANISH_NEAR_BOUNDARY,
    steps: int = MOSER_STEPS,
) -> list[RefinementRow]:
    """Pullback residual of one shear perturbation of ``density`` on successively halved grids.

    Each size must be ``2 n - 1`` for the previous ``n``, so every grid
    halves the spacing of the one before. ``order`` is ``log2`` of the
    residual ratio to the previous grid, ``nan`` for the first.

    Raises
    ------
    ValueError
        If ``sizes`` is empty or does not halve the spacing at each step.
    """
    if not sizes:
        raise ValueError("refinement_study needs at least one grid size")
    for coarse, fine in zip(sizes, sizes[1:]):
        if fine != 2 * coarse - 1:
            raise ValueError(f"Grid {fine} does not halve the spacing of grid {coarse}")

    rows: list[RefinementRow] = []
    for n in sizes:
        omega = GridForm.from_function(Grid.rectangle(box, n), density)
        (row,) = perturbation_suite(omega, [amplitude], mode, steps)
        residual = row.pullback_residual
        order = math.nan
        if rows and residual > 0.0 and rows[-1].pullback_residual > 0.0:
            order = math.log2(rows[-1].pullback_residual / residual)
        rows.append(RefinementRow(n, residual, order))
        logging.getLogger().info(f"Grid {n}: pullback residual {residual:.3g}, order {order:.2f}")
    return rows
