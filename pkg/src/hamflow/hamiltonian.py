"""Hamiltonian functions on the torus and the disc.

All classes here are immutable and picklable so they can be shipped to
worker processes. Callables handed to ``FunctionHamiltonian`` must be
module-level functions for the same reason.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .constants import H_FD, SUPPORT_CHECK_SAMPLES
from .domain import Domain, Support, as_points
from .profiles import ConstantSchedule
from .protocol import Hamiltonian, RadialProfile, TimeSchedule


def _symplectic(gradient: np.ndarray) -> np.ndarray:
    return np.column_stack([-gradient[:, 1], gradient[:, 0]])


@dataclass(frozen=True)
class RadialHamiltonian:
    """Radial profile around ``center`` times a time schedule.

    ``radius=None`` declares full support (used for the quadratic
    Hamiltonian on the disc). The flow rotates each circle around the
    center with angular velocity ``scale * schedule(t) * profile.rate(r)``.
    """

    domain: Domain
    center: tuple[float, float]
    radius: float | None
    profile: RadialProfile
    schedule: TimeSchedule = field(default_factory=ConstantSchedule)
    scale: float = 1.0
    name: str = "radial"

    @property
    def support(self) -> Support:
        if self.radius is None:
            return Support.full()
        return Support.disc(self.center, self.radius)

    @property
    def time_dependent(self) -> bool:
        return self.schedule.time_dependent

    def _offsets(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        offsets = self.domain.displacement(np.asarray(self.center), as_points(points))
        r = np.hypot(offsets[:, 0], offsets[:, 1])
        inside = np.ones(len(r), dtype=bool) if self.radius is None else r < self.radius
        return offsets, r, inside

    def value(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        _, r, inside = self._offsets(points)
        factor = self.scale * self.schedule.value(t)
        return np.where(inside, factor * self.profile.value(r), 0.0)

    def gradient(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        offsets, r, inside = self._offsets(points)
        rate = np.where(inside, self.profile.rate(r), 0.0)
        return (self.scale * self.schedule.value(t)) * rate[:, None] * offsets

    def sgrad(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        return _symplectic(self.gradient(points, t))

    def rotation_angle(self, points: np.ndarray, t0: float, t1: float | np.ndarray) -> np.ndarray:
        """Counterclockwise angle swept around the center; ``t1`` may vary per point."""
        _, r, inside = self._offsets(points)
        swept = self.scale * (self.schedule.integral(t1) - self.schedule.integral(t0))
        return np.where(inside, swept * self.profile.rate(r), 0.0)

    def rotate(self, points: np.ndarray, t0: float, t1: float | np.ndarray) -> np.ndarray:
        """Exact time-``t0 -> t1`` flow; keeps lifted coordinates continuous."""
        points = as_points(points)
        offsets, _, _ = self._offsets(points)
        theta = self.rotation_angle(points, t0, t1)
        cos, sin = np.cos(theta), np.sin(theta)
        turned = np.column_stack(
            [cos * offsets[:, 0] - sin * offsets[:, 1], sin * offsets[:, 0] + cos * offsets[:, 1]]
        )
        return points + (turned - offsets)

    def scaled(self, factor: float) -> RadialHamiltonian:
        return replace(self, scale=self.scale * factor)

    def shifted(self, offset: tuple[float, float]) -> RadialHamiltonian:
        center = self.domain.wrap(np.asarray(self.center) + np.asarray(offset, dtype=float))
        return replace(self, center=(float(center[0]), float(center[1])))


@dataclass(frozen=True)
class ZeroHamiltonian:
    """``F = 0``; its support is empty."""

    domain: Domain
    name: str = "zero"
    time_dependent: bool = False

    @property
    def support(self) -> Support:
        return Support.disc((0.0, 0.0), 0.0)

    def value(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        return np.zeros(len(as_points(points)))

    def gradient(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        return np.zeros_like(as_points(points))

    def sgrad(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        return np.zeros_like(as_points(points))

    def scaled(self, factor: float) -> ZeroHamiltonian:
        return self

    def shifted(self, offset: tuple[float, float]) -> ZeroHamiltonian:
        return self


@dataclass(frozen=True)
class FunctionHamiltonian:
    """Arbitrary ``func(points, t)`` with a finite-difference gradient."""

    domain: Domain
    func: Callable[[np.ndarray, float], np.ndarray]
    support: Support = field(default_factory=Support.full)
    time_dependent: bool = False
    scale: float = 1.0
    offset: tuple[float, float] = (0.0, 0.0)
    h_fd: float = H_FD
    name: str = "function"

    def value(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        local = self.domain.wrap(as_points(points) - np.asarray(self.offset))
        return self.scale * np.asarray(self.func(local, t), dtype=float)

    def gradient(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        points = as_points(points)
        columns = []
        for axis in range(2):
            step = np.zeros(2)
            step[axis] = self.h_fd
            forward = self.value(points + step, t)
            backward = self.value(points - step, t)
            columns.append((forward - backward) / (2.0 * self.h_fd))
        return np.column_stack(columns)

    def sgrad(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        points = as_points(points)
        field_ = _symplectic(self.gradient(points, t))
        field_[~self.support.contains(points, self.domain)] = 0.0
        return field_

    def scaled(self, factor: float) -> FunctionHamiltonian:
        return replace(self, scale=self.scale * factor)

    def shifted(self, offset: tuple[float, float]) -> FunctionHamiltonian:
        moved = np.asarray(self.offset) + np.asarray(offset, dtype=float)
        support = self.support
        if not support.is_full:
            center = self.domain.wrap(np.asarray(support.center) + np.asarray(offset, dtype=float))
            support = Support.disc((float(center[0]), float(center[1])), support.radius)
        return replace(self, offset=(float(moved[0]), float(moved[1])), support=support)


@dataclass(frozen=True)
class ConcatenatedHamiltonian:
    """``first`` on ``[0, 1/2]`` then ``second`` on ``[1/2, 1]``, each run at double speed.

    Its time-1 map is ``g f`` for the time-1 maps ``f`` of ``first`` and
    ``g`` of ``second``. The switch happens at ``t = 1/2``, so integrators
    should not sample that instant.
    """

    first: Hamiltonian
    second: Hamiltonian
    time_dependent: bool = True

    @property
    def domain(self) -> Domain:
        return self.first.domain

    @property
    def name(self) -> str:
        return f"{self.second.name}*{self.first.name}"

    @property
    def support(self) -> Support:
        if self.first.support.is_empty:
            return self.second.support
        if self.second.support.is_empty or self.first.support == self.second.support:
            return self.first.support
        return Support.full()

    def _piece(self, t: float) -> tuple[Hamiltonian, float]:
        if t < 0.5:
            return self.first, 2.0 * t
        return self.second, 2.0 * t - 1.0

    def value(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        piece, local = self._piece(t)
        return 2.0 * piece.value(points, local)

    def gradient(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        piece, local = self._piece(t)
        return 2.0 * piece.gradient(points, local)

    def sgrad(self, points: np.ndarray, t: float = 0.0) -> np.ndarray:
        piece, local = self._piece(t)
        return 2.0 * piece.sgrad(points, local)

    def scaled(self, factor: float) -> ConcatenatedHamiltonian:
        return replace(self, first=self.first.scaled(factor), second=self.second.scaled(factor))

    def shifted(self, offset: tuple[float, float]) -> ConcatenatedHamiltonian:
        return replace(self, first=self.first.shifted(offset), second=self.second.shifted(offset))


def sgrad(hamiltonian: Hamiltonian, point: np.ndarray, t: float = 0.0) -> np.ndarray:
    """Symplectic gradient ``(-dF/dq, dF/dp)`` at one point or an ``(N, 2)`` array."""
    field_ = hamiltonian.sgrad(as_points(point), t)
    return field_[0] if np.ndim(point) == 1 else field_


def sample_domain(domain: Domain, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` uniform points of the domain."""
    if domain.is_torus:
        return rng.random((n, 2))
    samples = np.empty((0, 2))
    while len(samples) < n:
        batch = rng.uniform(-1.0, 1.0, size=(2 * n, 2))
        samples = np.vstack([samples, batch[domain.contains(batch)]])
    return samples[:n]


def vanishes_outside_support(
    hamiltonian: Hamiltonian,
    n_samples: int = SUPPORT_CHECK_SAMPLES,
    seed: int = 0,
    times: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75),
) -> bool:
    """Check by random sampling that ``F`` is zero off its declared support."""
    support = hamiltonian.support
    if support.is_full:
        return True
    rng = np.random.default_rng(seed)
    points = sample_domain(hamiltonian.domain, n_samples, rng)
    outside = points[~support.contains(points, hamiltonian.domain)]
    if len(outside) == 0:
        return True
    return all(bool(np.all(hamiltonian.value(outside, t) == 0.0)) for t in times)
