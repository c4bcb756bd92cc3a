"""Randomized bump Hamiltonians for the probes and audits."""
from __future__ import annotations

import numpy as np

from ..hamflow import Domain, RadialHamiltonian, bump


def random_bump(
    rng: np.random.Generator,
    radius: float,
    mass: float,
    name: str = "random_bump",
) -> RadialHamiltonian:
    """Bump on the torus with the given radius and mass at a uniform random center."""
    center = rng.random(2)
    return bump(Domain.torus(), (float(center[0]), float(center[1])), radius, mass, name=name)


def radius_for_area(area: float) -> float:
    """Radius of the disc of the given area."""
    if not 0.0 < area < np.pi / 4:
        raise ValueError(f"Support area must lie in (0, pi/4), got: {area}")
    return float(np.sqrt(area / np.pi))


def signed_mass(rng: np.random.Generator, low: float, high: float) -> float:
    """Magnitude uniform in ``[low, high]`` with a random sign."""
    magnitude = rng.uniform(low, high)
    return float(magnitude if rng.random() < 0.5 else -magnitude)
