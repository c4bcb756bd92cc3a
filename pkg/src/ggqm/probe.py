"""Empirical scale of a quasi-morphism: the support areas on which it vanishes."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..fgword import CountingQM
from ..hamflow import calabi
from .constants import (
    DEFAULT_N_SAMPLES,
    DEFAULT_P,
    PROBE_MASS_RANGE,
    PROBE_MASS_SCALE,
    PROBE_TRIALS,
    ZERO_SIGMAS,
)
from .ensembles import radius_for_area, random_bump, signed_mass
from .estimator import GGEstimate, gg_estimate


@dataclass(frozen=True)
class ProbeRow:
    area: float
    kernel: str
    trial: int
    calabi: float
    estimate: GGEstimate


@dataclass(frozen=True)
class ScaleProbe:
    """Estimates on random disc-supported Hamiltonians, by increasing support area."""

    kernel: str
    areas: tuple[float, ...]
    rows: tuple[ProbeRow, ...] = field(default_factory=tuple)
    sigmas: float = ZERO_SIGMAS

    def vanishes_at(self, area: float) -> bool:
        return all(row.estimate.is_zero(self.sigmas) for row in self.rows if row.area == area)

    @property
    def estimated_scale(self) -> Optional[float]:
        """Largest probed area up to which every estimate is zero within error.

        ``0.0`` if the smallest area already shows a nonzero estimate, and
        ``None`` when nothing was probed.
        """
        if not self.areas:
            return None
        scale = 0.0
        for area in self.areas:
            if not self.vanishes_at(area):
                break
            scale = area
        return scale


def _trial_seed(seed: int, area_index: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, area_index, trial]).generate_state(1)[0])


def scale_probe(
    mu: CountingQM,
    areas: Sequence[float],
    trials: int = PROBE_TRIALS,
    seed: int = 0,
    p: int = DEFAULT_P,
    n_samples: int = DEFAULT_N_SAMPLES,
    mass_scale: float = PROBE_MASS_SCALE,
    **kwargs,
) -> ScaleProbe:
    """Estimate ``mu`` on ``trials`` random bumps per support area.

    Each bump has a uniform random center and a mass of random sign whose
    magnitude is ``mass_scale * area`` times a factor drawn from
    ``PROBE_MASS_RANGE``. Remaining keyword arguments go to ``gg_estimate``.
    """
    areas = tuple(float(a) for a in areas)
    if any(b <= a for a, b in zip(areas, areas[1:])):
        raise ValueError(f"Probe areas must be strictly increasing, got: {list(areas)}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got: {trials}")
    radii = [radius_for_area(area) for area in areas]
    logger = logging.getLogger()

    rows = []
    for i, (area, radius) in enumerate(zip(areas, radii)):
        for trial in range(trials):
            trial_seed = _trial_seed(seed, i, trial)
            rng = np.random.default_rng(trial_seed)
            low, high = PROBE_MASS_RANGE
            mass = mass_scale * area * signed_mass(rng, low, high)
            F = random_bump(rng, radius, mass, name=f"probe_a{area:g}_t{trial}")
            estimate = gg_estimate(mu, F, p=p, n_samples=n_samples, seed=trial_seed, **kwargs)
            rows.append(ProbeRow(area, mu.name, trial, calabi(F), estimate))
        logger.info(f"Probed area {area:g} for '{mu.name}' with {trials} bumps")

    return ScaleProbe(kernel=mu.name, areas=areas, rows=tuple(rows))
