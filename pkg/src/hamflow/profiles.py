"""Smooth cutoffs, radial profiles and time schedules."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import cumulative_trapezoid, quad

from .constants import BUMP_PLATEAU, PROFILE_TABLE_SIZE


def _flat(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    positive = u > 0
    safe = np.where(positive, u, 1.0)
    return np.where(positive, np.exp(-1.0 / safe), 0.0)


def _flat_derivative(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    # exp(-1/u) underflows to zero well before u**2 does
    positive = u > 1e-3
    safe = np.where(positive, u, 1.0)
    return np.where(positive, np.exp(-1.0 / safe) / safe**2, 0.0)


def smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for u <= 0, 1 for u >= 1."""
    u = np.asarray(u, dtype=float)
    left, right = _flat(u), _flat(1.0 - u)
    return left / (left + right)


def smooth_step_derivative(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    left, right = _flat(u), _flat(1.0 - u)
    d_left, d_right = _flat_derivative(u), _flat_derivative(1.0 - u)
    return (d_left * right + left * d_right) / (left + right) ** 2


def cutoff(x: np.ndarray, inner: float, outer: float) -> np.ndarray:
    """Equal to 1 for |x| <= inner and to 0 for |x| >= outer."""
    return 1.0 - smooth_step((np.abs(x) - inner) / (outer - inner))


def cutoff_derivative(x: np.ndarray, inner: float, outer: float) -> np.ndarray:
    """Derivative of ``cutoff`` with respect to x."""
    x = np.asarray(x, dtype=float)
    width = outer - inner
    return -smooth_step_derivative((np.abs(x) - inner) / width) * np.sign(x) / width


def plateau(s: np.ndarray, s0: float = BUMP_PLATEAU) -> np.ndarray:
    """Radial plateau: 1 on [0, s0], smoothly 0 from s = 1 on."""
    return 1.0 - smooth_step((np.asarray(s, dtype=float) - s0) / (1.0 - s0))


def plateau_derivative(s: np.ndarray, s0: float = BUMP_PLATEAU) -> np.ndarray:
    return -smooth_step_derivative((np.asarray(s, dtype=float) - s0) / (1.0 - s0)) / (1.0 - s0)


@lru_cache(maxsize=8)
def plateau_mass(s0: float = BUMP_PLATEAU) -> float:
    """Integral of the plateau profile over the unit disc."""
    value, _ = quad(lambda s: float(plateau(np.array([s]), s0)[0]) * s, 0.0, 1.0, limit=200)
    return 2.0 * np.pi * value


@lru_cache(maxsize=8)
def _plateau_tail_table(s0: float) -> tuple[np.ndarray, np.ndarray]:
    s = np.linspace(0.0, 1.0, PROFILE_TABLE_SIZE)
    head = cumulative_trapezoid(plateau(s, s0) * s, s, initial=0.0)
    return s, head[-1] - head


def plateau_tail(s: np.ndarray, s0: float = BUMP_PLATEAU) -> np.ndarray:
    """``J(s) = integral from s to 1 of plateau(u) u du`` (zero for s >= 1)."""
    grid, tail = _plateau_tail_table(s0)
    return np.interp(np.asarray(s, dtype=float), grid, tail, right=0.0)


@dataclass(frozen=True)
class BumpProfile:
    """Nonnegative plateau bump of a given radius whose integral is ``mass``."""

    radius: float
    mass: float
    s0: float = BUMP_PLATEAU

    @property
    def amplitude(self) -> float:
        if self.radius == 0.0:
            return 0.0
        return self.mass / (self.radius**2 * plateau_mass(self.s0))

    def value(self, r: np.ndarray) -> np.ndarray:
        return self.amplitude * plateau(np.asarray(r) / self.radius, self.s0)

    def derivative(self, r: np.ndarray) -> np.ndarray:
        slope = plateau_derivative(np.asarray(r) / self.radius, self.s0)
        return self.amplitude * slope / self.radius

    def rate(self, r: np.ndarray) -> np.ndarray:
        """Angular velocity ``F'(r)/r`` of the generated rotation."""
        r = np.asarray(r, dtype=float)
        positive = r > 0
        safe = np.where(positive, r, 1.0)
        return np.where(positive, self.derivative(safe) / safe, 0.0)


@dataclass(frozen=True)
class RigidProfile:
    """Rotation with angular velocity ``omega`` on the plateau, cut off at the radius."""

    radius: float
    omega: float
    s0: float = BUMP_PLATEAU

    def value(self, r: np.ndarray) -> np.ndarray:
        return -self.omega * self.radius**2 * plateau_tail(np.asarray(r) / self.radius, self.s0)

    def derivative(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return self.omega * r * plateau(r / self.radius, self.s0)

    def rate(self, r: np.ndarray) -> np.ndarray:
        return self.omega * plateau(np.asarray(r, dtype=float) / self.radius, self.s0)


@dataclass(frozen=True)
class QuadraticProfile:
    """``(p^2 + q^2) / 2``: rigid unit-speed rotation."""

    def value(self, r: np.ndarray) -> np.ndarray:
        return 0.5 * np.asarray(r, dtype=float) ** 2

    def derivative(self, r: np.ndarray) -> np.ndarray:
        return np.asarray(r, dtype=float)

    def rate(self, r: np.ndarray) -> np.ndarray:
        return np.ones_like(np.asarray(r, dtype=float))


@dataclass(frozen=True)
class ConstantSchedule:
    """Autonomous Hamiltonians."""

    time_dependent: bool = False

    def value(self, t: float) -> float:
        return 1.0

    def integral(self, t: float | np.ndarray) -> float | np.ndarray:
        return np.asarray(t, dtype=float)


@dataclass(frozen=True)
class PulseSchedule:
    """1-periodic pulse ``1 - cos(2 pi t)`` with mean 1, vanishing at integer times."""

    time_dependent: bool = True

    def value(self, t: float) -> float:
        return float(1.0 - np.cos(2.0 * np.pi * t))

    def integral(self, t: float | np.ndarray) -> float | np.ndarray:
        t = np.asarray(t, dtype=float)
        return t - np.sin(2.0 * np.pi * t) / (2.0 * np.pi)
