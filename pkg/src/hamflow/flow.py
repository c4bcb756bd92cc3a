"""Flows of Hamiltonian vector fields and the maps they generate."""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from ..errors import StepUnderflowError
from .constants import DEFAULT_STEPS, MAX_STEPS
from .domain import Domain, Support, as_points
from .factory import IntegratorFactory
from .integrators import ExactRadialIntegrator
from .protocol import Hamiltonian, Integrator
from .types import IntegratorType


@dataclass(frozen=True)
class Trajectory:
    """Flow samples at uniform times, in lifted (unwrapped) coordinates.

    ``points`` has shape ``(steps + 1, N, 2)``.
    """

    times: np.ndarray
    points: np.ndarray
    refinements: int = 0

    @property
    def steps(self) -> int:
        return len(self.times) - 1

    @property
    def end(self) -> np.ndarray:
        return self.points[-1]

    def max_spacing(self) -> float:
        """Largest distance between consecutive samples of any trajectory."""
        if self.steps == 0:
            return 0.0
        jumps = np.diff(self.points, axis=0)
        return float(np.max(np.hypot(jumps[..., 0], jumps[..., 1])))


def _check_steps(steps: int, max_steps: int) -> None:
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got: {steps}")
    if steps > max_steps:
        raise StepUnderflowError(f"Flow needs more than {max_steps} steps (requested {steps})")


def integrate(
    hamiltonian: Hamiltonian,
    points: np.ndarray,
    t0: float,
    t1: float,
    steps: int = DEFAULT_STEPS,
    method: IntegratorType = IntegratorType.MIDPOINT,
    integrator: Integrator | None = None,
    max_steps: int = MAX_STEPS,
) -> Trajectory:
    """Integrate a batch of points with ``steps`` uniform steps from ``t0`` to ``t1``."""
    _check_steps(steps, max_steps)
    integrator = integrator or IntegratorFactory.create(method)
    times = np.linspace(t0, t1, steps + 1)
    current = as_points(points).copy()
    samples = [current]
    if hamiltonian.support.is_empty:
        return Trajectory(times, np.repeat(current[None], steps + 1, axis=0))
    if isinstance(integrator, ExactRadialIntegrator):
        return Trajectory(times, integrator.sample(hamiltonian, current, times))
    for start, end in zip(times[:-1], times[1:]):
        current = integrator.step(hamiltonian, current, float(start), float(end))
        samples.append(current)
    return Trajectory(times, np.stack(samples))


def trajectory(
    hamiltonian: Hamiltonian,
    points: np.ndarray,
    t0: float = 0.0,
    t1: float = 1.0,
    steps: int = DEFAULT_STEPS,
    method: IntegratorType = IntegratorType.MIDPOINT,
    max_spacing: float | None = None,
    max_steps: int = MAX_STEPS,
) -> Trajectory:
    """Integrate, doubling the step count until consecutive samples are within ``max_spacing``.

    Raises
    ------
    StepUnderflowError
        If the spacing is not reached within ``max_steps`` steps.
    """
    integrator = IntegratorFactory.create(method)
    refinements = 0
    while True:
        result = integrate(
            hamiltonian, points, t0, t1, steps, integrator=integrator, max_steps=max_steps
        )
        if max_spacing is None or result.max_spacing() <= max_spacing:
            return replace(result, refinements=refinements)
        steps *= 2
        refinements += 1
        logging.getLogger().debug(f"Refining {hamiltonian.name} trajectory to {steps} steps")


def flow(
    hamiltonian: Hamiltonian,
    x0: np.ndarray,
    t0: float = 0.0,
    t1: float = 1.0,
    steps: int = DEFAULT_STEPS,
    method: IntegratorType = IntegratorType.MIDPOINT,
    max_spacing: float | None = None,
    max_steps: int = MAX_STEPS,
    with_trajectory: bool = False,
) -> np.ndarray | tuple[np.ndarray, Trajectory]:
    """Time ``t0 -> t1`` flow of a point or an ``(N, 2)`` array; torus outputs are wrapped."""
    result = trajectory(hamiltonian, x0, t0, t1, steps, method, max_spacing, max_steps)
    end = hamiltonian.domain.wrap(result.end)
    if np.ndim(x0) == 1:
        end = end[0]
    return (end, result) if with_trajectory else end


@dataclass(frozen=True)
class FlowMap:
    """Time ``t0 -> t1`` map of a Hamiltonian flow, evaluated on demand."""

    hamiltonian: Hamiltonian
    t0: float = 0.0
    t1: float = 1.0
    steps: int = DEFAULT_STEPS
    method: IntegratorType = IntegratorType.MIDPOINT

    @property
    def domain(self) -> Domain:
        return self.hamiltonian.domain

    @property
    def support(self) -> Support:
        return self.hamiltonian.support

    def lifted(self, points: np.ndarray) -> np.ndarray:
        """Images without wrapping, continuous in the starting point."""
        return integrate(self.hamiltonian, points, self.t0, self.t1, self.steps, self.method).end

    def __call__(self, points: np.ndarray) -> np.ndarray:
        end = self.domain.wrap(self.lifted(points))
        return end[0] if np.ndim(points) == 1 else end

    def inverse(self) -> FlowMap:
        return replace(self, t0=self.t1, t1=self.t0)


@dataclass(frozen=True)
class IdentityMap:
    """The identity of a domain, with empty support."""

    domain: Domain

    @property
    def support(self) -> Support:
        return Support.disc((0.0, 0.0), 0.0)

    def lifted(self, points: np.ndarray) -> np.ndarray:
        return as_points(points).copy()

    def __call__(self, points: np.ndarray) -> np.ndarray:
        end = self.domain.wrap(as_points(points).copy())
        return end[0] if np.ndim(points) == 1 else end

    def inverse(self) -> IdentityMap:
        return self
