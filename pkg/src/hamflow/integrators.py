"""One-step integrators for Hamiltonian flows in lifted coordinates."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..errors import UnsupportedDomainError
from .constants import MIDPOINT_MAX_ITER, MIDPOINT_TOL, PROJECTION_ITERATIONS
from .hamiltonian import RadialHamiltonian
from .protocol import Hamiltonian, Integrator


@dataclass(frozen=True)
class MidpointIntegrator:
    """Implicit midpoint rule solved by fixed-point iteration.

    Symplectic, hence area preserving up to the iteration tolerance.
    Points where the field vanishes are exact fixed points.
    """

    tol: float = MIDPOINT_TOL
    max_iter: int = MIDPOINT_MAX_ITER
    order: int | None = 2

    def step(
        self, hamiltonian: Hamiltonian, points: np.ndarray, t0: float, t1: float
    ) -> np.ndarray:
        h = t1 - t0
        t_mid = t0 + 0.5 * h
        guess = points.copy()
        active = np.ones(len(points), dtype=bool)
        for _ in range(self.max_iter):
            if not active.any():
                break
            base = points[active]
            updated = base + h * hamiltonian.sgrad(0.5 * (base + guess[active]), t_mid)
            change = np.max(np.abs(updated - guess[active]), axis=1)
            guess[active] = updated
            still = change > self.tol
            active[np.flatnonzero(active)[~still]] = False
        else:
            if active.any():
                logging.getLogger().debug(
                    f"Midpoint iteration stopped at {self.max_iter} iterations "
                    f"for {int(active.sum())} points"
                )
        return guess


@dataclass(frozen=True)
class RK4ProjectedIntegrator:
    """Classical RK4, projected back onto the energy level for autonomous F."""

    iterations: int = PROJECTION_ITERATIONS
    order: int | None = 4

    def step(
        self, hamiltonian: Hamiltonian, points: np.ndarray, t0: float, t1: float
    ) -> np.ndarray:
        h = t1 - t0
        k1 = hamiltonian.sgrad(points, t0)
        k2 = hamiltonian.sgrad(points + 0.5 * h * k1, t0 + 0.5 * h)
        k3 = hamiltonian.sgrad(points + 0.5 * h * k2, t0 + 0.5 * h)
        k4 = hamiltonian.sgrad(points + h * k3, t1)
        updated = points + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if hamiltonian.time_dependent:
            return updated
        level = hamiltonian.value(points, t0)
        for _ in range(self.iterations):
            gradient = hamiltonian.gradient(updated, t1)
            norm2 = np.einsum("ij,ij->i", gradient, gradient)
            moving = norm2 > 0.0
            if not moving.any():
                break
            excess = hamiltonian.value(updated, t1) - level
            correction = np.where(moving, excess / np.where(moving, norm2, 1.0), 0.0)
            updated = updated - correction[:, None] * gradient
        return updated


@dataclass(frozen=True)
class ExactRadialIntegrator:
    """Closed-form rotation flow of a radial Hamiltonian; exact for any step."""

    order: int | None = None

    def step(
        self, hamiltonian: Hamiltonian, points: np.ndarray, t0: float, t1: float
    ) -> np.ndarray:
        return self.sample(hamiltonian, points, np.array([t0, t1]))[-1]

    def sample(self, hamiltonian: Hamiltonian, points: np.ndarray, times: np.ndarray) -> np.ndarray:
        """Flow of ``points`` from ``times[0]`` to every entry of ``times`` in one pass.

        Returns an array of shape ``(len(times), N, 2)``.
        """
        if not isinstance(hamiltonian, RadialHamiltonian):
            if hamiltonian.support.is_empty:
                return np.repeat(points[None], len(times), axis=0)
            raise UnsupportedDomainError(
                f"exact-radial integration needs a radial Hamiltonian, got: {hamiltonian.name}"
            )
        n = len(points)
        tiled = np.tile(points, (len(times), 1))
        moved = hamiltonian.rotate(tiled, float(times[0]), np.repeat(times, n))
        return moved.reshape(len(times), n, 2)


def create_midpoint_integrator(config: dict[str, Any]) -> Integrator:
    """Create the implicit midpoint integrator.

    Parameters
    ----------
    config
        Optional ``tol`` and ``max_iter``.
    """
    return MidpointIntegrator(
        tol=float(config.get("tol", MIDPOINT_TOL)),
        max_iter=int(config.get("max_iter", MIDPOINT_MAX_ITER)),
    )


def create_rk4_projected_integrator(config: dict[str, Any]) -> Integrator:
    return RK4ProjectedIntegrator(iterations=int(config.get("iterations", PROJECTION_ITERATIONS)))


def create_exact_radial_integrator(config: dict[str, Any]) -> Integrator:
    return ExactRadialIntegrator()
