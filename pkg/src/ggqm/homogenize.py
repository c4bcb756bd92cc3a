"""Homogenization schedules, extrapolation and drift monitoring."""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from ..fgword import CountingQM
from ..hamflow import Hamiltonian
from .constants import DRIFT_SIGMAS, P_SCHEDULE
from .estimator import GGEstimate, gg_estimates


def gg_schedule(
    kernels: Sequence[CountingQM],
    hamiltonian: Hamiltonian,
    schedule: Sequence[int] = P_SCHEDULE,
    **kwargs,
) -> dict[str, list[GGEstimate]]:
    """Estimates for every power in ``schedule``, keyed by kernel name.

    Every power reuses the same seed, so successive powers see the same pairs.
    Remaining keyword arguments go to ``gg_estimates``.
    """
    if list(schedule) != sorted(set(schedule)):
        raise ValueError(f"p-schedule must be strictly increasing, got: {list(schedule)}")
    table: dict[str, list[GGEstimate]] = {mu.name: [] for mu in kernels}
    for p in schedule:
        for estimate in gg_estimates(kernels, hamiltonian, p=p, **kwargs):
            table[estimate.kernel].append(estimate)
    return table


def richardson(estimates: Sequence[GGEstimate]) -> float:
    """First-order extrapolation ``2 v(2p) - v(p)`` from the last two estimates.

    With one estimate its value is returned. The last two powers must double.
    """
    if not estimates:
        raise ValueError("richardson needs at least one estimate")
    if len(estimates) == 1:
        return estimates[0].value
    low, high = estimates[-2], estimates[-1]
    if high.p != 2 * low.p:
        raise ValueError(f"Extrapolation needs doubled powers, got p={low.p} and p={high.p}")
    return 2.0 * high.value - low.value


@dataclass(frozen=True)
class Drift:
    """Change of the estimate between ``p`` and ``2p``."""

    p: int
    drift: float
    tolerance: float

    @property
    def within(self) -> bool:
        return self.drift <= self.tolerance


def homogenization_drift(
    estimates: Sequence[GGEstimate], sigmas: float = DRIFT_SIGMAS
) -> list[Drift]:
    """``|v(2k) - v(k)|`` for every doubled pair, against ``sigmas`` combined standard errors.

    A drift above tolerance, or one growing with ``k``, is logged as a warning.
    """
    by_power = {e.p: e for e in estimates}
    drifts = []
    for p in sorted(by_power):
        if 2 * p not in by_power:
            continue
        low, high = by_power[p], by_power[2 * p]
        tolerance = sigmas * math.hypot(low.std_error, high.std_error)
        drifts.append(Drift(p=p, drift=abs(high.value - low.value), tolerance=tolerance))

    logger = logging.getLogger()
    for previous, current in zip(drifts, drifts[1:]):
        if current.drift > previous.drift and not current.within:
            logger.warning(
                f"Homogenization drift grows from {previous.drift:.3g} (p={previous.p}) "
                f"to {current.drift:.3g} (p={current.p})"
            )
    for drift in drifts:
        if not drift.within:
            logger.warning(
                f"Homogenization drift {drift.drift:.3g} at p={drift.p} exceeds "
                f"{drift.tolerance:.3g}"
            )
    return drifts
