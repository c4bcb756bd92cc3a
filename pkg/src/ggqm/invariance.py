"""Invariance checks of the estimator: torus shifts and one-parameter subgroups."""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from ..fgword import CountingQM
from ..hamflow import Hamiltonian
from .constants import DEFAULT_N_SAMPLES, DEFAULT_P, INVARIANCE_SIGMAS, LINEARITY_SCALES, SHIFT
from .estimator import GGEstimate, gg_estimates


@dataclass(frozen=True)
class InvarianceRow:
    """An estimate compared with the value it should reproduce."""

    kernel: str
    label: str
    value: float
    expected: float
    tolerance: float

    @property
    def deviation(self) -> float:
        return abs(self.value - self.expected)

    @property
    def within(self) -> bool:
        return self.deviation <= self.tolerance


def shift_invariance(
    kernels: Sequence[CountingQM],
    hamiltonian: Hamiltonian,
    offset: tuple[float, float] = SHIFT,
    p: int = DEFAULT_P,
    n_samples: int = DEFAULT_N_SAMPLES,
    seed: int = 0,
    sigmas: float = INVARIANCE_SIGMAS,
    **kwargs,
) -> list[InvarianceRow]:
    """Estimates on ``F`` and on ``F`` conjugated by the torus shift ``offset``.

    The two must agree within ``sigmas`` combined standard errors. Remaining
    keyword arguments go to ``gg_estimates``.
    """
    base = gg_estimates(kernels, hamiltonian, p=p, n_samples=n_samples, seed=seed, **kwargs)
    moved = gg_estimates(
        kernels, hamiltonian.shifted(offset), p=p, n_samples=n_samples, seed=seed, **kwargs
    )
    label = f"shift=({offset[0]:g}, {offset[1]:g})"
    rows = [
        InvarianceRow(
            kernel=b.kernel,
            label=label,
            value=m.value,
            expected=b.value,
            tolerance=sigmas * math.hypot(b.std_error, m.std_error),
        )
        for b, m in zip(base, moved)
    ]
    _log(rows, hamiltonian)
    return rows


def subgroup_linearity(
    kernels: Sequence[CountingQM],
    hamiltonian: Hamiltonian,
    scales: Sequence[int] = LINEARITY_SCALES,
    p: int = DEFAULT_P,
    n_samples: int = DEFAULT_N_SAMPLES,
    seed: int = 0,
    sigmas: float = INVARIANCE_SIGMAS,
    **kwargs,
) -> list[InvarianceRow]:
    """Estimates on the time-``s`` maps of an autonomous ``F`` against ``s`` times the time-1 map.

    The time-``s`` map is generated by ``s F``.

    Raises
    ------
    ValueError
        If ``F`` depends on time or a scale is not a positive integer.
    """
    if hamiltonian.time_dependent:
        raise ValueError(f"Linearity needs an autonomous Hamiltonian, got: {hamiltonian.name}")
    if any(s < 1 for s in scales):
        raise ValueError(f"Scales must be positive integers, got: {list(scales)}")

    def estimate(s: int) -> list[GGEstimate]:
        F = hamiltonian if s == 1 else hamiltonian.scaled(float(s))
        return gg_estimates(kernels, F, p=p, n_samples=n_samples, seed=seed, **kwargs)

    unit = estimate(1)
    rows = []
    for s in scales:
        scaled = unit if s == 1 else estimate(s)
        rows.extend(
            InvarianceRow(
                kernel=u.kernel,
                label=f"s={s}",
                value=e.value,
                expected=s * u.value,
                tolerance=sigmas * math.hypot(e.std_error, s * u.std_error),
            )
            for u, e in zip(unit, scaled)
        )
    _log(rows, hamiltonian)
    return rows


def _log(rows: list[InvarianceRow], hamiltonian: Hamiltonian) -> None:
    logger = logging.getLogger()
    for row in rows:
        message = (
            f"{row.kernel} on {hamiltonian.name} [{row.label}]: {row.value:.5g} "
            f"vs {row.expected:.5g} (tolerance {row.tolerance:.2g})"
        )
        if row.within:
            logger.info(message)
        else:
            logger.warning(message)
