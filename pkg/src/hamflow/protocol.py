"""Protocols for Hamiltonians, radial profiles, schedules and integrators."""
from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

import numpy as np

if TYPE_CHECKING:
    from .domain import Domain, Support


class RadialProfile(Protocol):
    """Radial function ``F(r)`` together with its derivative and angular velocity."""

    def value(self, r: np.ndarray) -> np.ndarray:
        ...

    def derivative(self, r: np.ndarray) -> np.ndarray:
        ...

    def rate(self, r: np.ndarray) -> np.ndarray:
        """Angular velocity ``F'(r)/r``."""
        ...


class TimeSchedule(Protocol):
    """Scalar time factor multiplying an autonomous profile."""

    time_dependent: bool

    def value(self, t: float) -> float:
        ...

    def integral(self, t: float | np.ndarray) -> float | np.ndarray:
        """Antiderivative vanishing at ``t = 0``."""
        ...


class Hamiltonian(Protocol):
    """Time-dependent scalar field on a domain with a declared support."""

    domain: Domain
    support: Support
    time_dependent: bool
    name: str

    def value(self, points: np.ndarray, t: float) -> np.ndarray:
        """Values ``F(x, t)`` at an ``(N, 2)`` array of points."""
        ...

    def gradient(self, points: np.ndarray, t: float) -> np.ndarray:
        """``(dF/dp, dF/dq)`` at an ``(N, 2)`` array of points."""
        ...

    def sgrad(self, points: np.ndarray, t: float) -> np.ndarray:
        """Symplectic gradient ``(-dF/dq, dF/dp)``, zero outside the support."""
        ...

    def scaled(self, factor: float) -> Hamiltonian:
        ...

    def shifted(self, offset: tuple[float, float]) -> Hamiltonian:
        ...


class Integrator(Protocol):
    """One-step map of a Hamiltonian flow acting on lifted coordinates."""

    order: int | None

    def step(
        self, hamiltonian: Hamiltonian, points: np.ndarray, t0: float, t1: float
    ) -> np.ndarray:
        """Advance ``points`` (an ``(N, 2)`` lifted array) from ``t0`` to ``t1``."""
        ...


class PlanarMap(Protocol):
    """Area-preserving map of a domain that knows its support and inverse."""

    domain: Domain
    support: Support

    def __call__(self, points: np.ndarray) -> np.ndarray:
        ...

    def inverse(self) -> PlanarMap:
        ...
