"""Cocycle relation of pair loops and its randomized audit."""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from ..errors import NearPunctureError, StepUnderflowError
from ..fgword import CountingQM, Word, defect_estimate, qm_eval
from ..hamflow import ConcatenatedHamiltonian, Domain, Hamiltonian, IntegratorType
from ..punctured import PathOptions, close_loop, difference_path, word_of_loop
from .constants import AUDIT_MASS_RANGE, AUDIT_RADIUS_RANGE
from .ensembles import random_bump
from .sampling import sample_pair, sample_stream


@dataclass(frozen=True)
class CocycleResidual:
    """The loop words of ``g``, ``f`` and ``fg`` at one pair of points.

    ``w_g`` is the loop of ``(x, y)`` under ``g`` and ``w_f`` the loop of
    ``(g x, g y)`` under ``f``. ``w_fg`` is read from the composed isotopy
    flowed on its own. ``residual`` is ``|mu(w_fg) - mu(w_g) - mu(w_f)|``
    and ``endpoint_gap`` the distance between ``fg`` and ``f`` after ``g``
    at the two points.
    """

    residual: float
    w_g: Word
    w_f: Word
    w_fg: Word
    endpoint_gap: float = 0.0

    @property
    def holds(self) -> bool:
        """``w_fg`` equals ``w_g * w_f`` as a reduced word."""
        return self.w_fg == self.w_g * self.w_f


def cocycle_residual(
    mu: CountingQM,
    F: Hamiltonian,
    G: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    options: PathOptions | None = None,
) -> CocycleResidual:
    """Residual of the cocycle relation for the time-1 maps ``f`` of ``F`` and ``g`` of ``G``.

    ``fg`` is generated by ``G`` then ``F`` run back to back at double
    speed. Closed-form radial flows cannot follow that switch, so the
    composed path is integrated with the implicit midpoint rule instead.

    Raises
    ------
    NearPunctureError
        If any of the difference paths touches the puncture.
    """
    options = options or PathOptions()
    path_g = difference_path(G, x, y, 1.0, options)
    gx, gy = Domain.torus().wrap(path_g.final)
    path_f = difference_path(F, gx, gy, 1.0, options)

    composed_options = options
    if options.method is IntegratorType.EXACT_RADIAL:
        composed_options = replace(options, method=IntegratorType.MIDPOINT)
    path_fg = difference_path(ConcatenatedHamiltonian(G, F), x, y, 1.0, composed_options)
    gap = path_fg.final - path_f.final
    gap -= np.round(gap)
    endpoint_gap = float(np.max(np.hypot(gap[:, 0], gap[:, 1])))

    w_g = word_of_loop(close_loop(path_g, options.delta_punct))
    w_f = word_of_loop(close_loop(path_f, options.delta_punct))
    w_fg = word_of_loop(close_loop(path_fg, options.delta_punct))
    residual = abs(qm_eval(mu, w_fg) - qm_eval(mu, w_g) - qm_eval(mu, w_f))
    return CocycleResidual(
        residual=residual, w_g=w_g, w_f=w_f, w_fg=w_fg, endpoint_gap=endpoint_gap
    )


@dataclass(frozen=True)
class CocycleAudit:
    """Residuals of a randomized cocycle audit against the empirical defect."""

    kernel: str
    residuals: np.ndarray
    defect: float
    n_rejected: int
    holds: np.ndarray
    endpoint_gaps: np.ndarray

    @property
    def trials(self) -> int:
        return len(self.residuals)

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max()) if len(self.residuals) else 0.0

    @property
    def pass_rate(self) -> float:
        if not len(self.residuals):
            return 1.0
        return float(np.mean(self.residuals <= self.defect))

    @property
    def identity_rate(self) -> float:
        """Share of trials whose composed word is the product of the two words."""
        return float(np.mean(self.holds)) if len(self.holds) else 1.0


def cocycle_audit(
    mu: CountingQM,
    trials: int,
    seed: int = 0,
    defect_budget: int = 2_000,
    options: PathOptions | None = None,
) -> CocycleAudit:
    """Cocycle residuals for random bump pairs and random points.

    Trial ``i`` draws two bumps and a pair of points from the stream seeded
    by ``(seed, i)``. Draws that touch the puncture or stay unresolved are
    redrawn from the same stream. The closure slack is zero since
    connectors never cross the cuts.
    """
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got: {trials}")
    options = options or PathOptions()
    defect = defect_estimate(mu, budget=defect_budget, seed=seed)
    residuals, gaps = np.empty(trials), np.empty(trials)
    holds = np.zeros(trials, dtype=bool)
    rejected = 0
    for i in range(trials):
        rng = sample_stream(seed, i)
        while True:
            F, G = (
                random_bump(rng, rng.uniform(*AUDIT_RADIUS_RANGE), rng.uniform(*AUDIT_MASS_RANGE))
                for _ in range(2)
            )
            x, y = sample_pair(rng)
            try:
                result = cocycle_residual(mu, F, G, x, y, options)
            except (NearPunctureError, StepUnderflowError):
                rejected += 1
                continue
            residuals[i], gaps[i], holds[i] = result.residual, result.endpoint_gap, result.holds
            break
    audit = CocycleAudit(
        kernel=mu.name,
        residuals=residuals,
        defect=defect,
        n_rejected=rejected,
        holds=holds,
        endpoint_gaps=gaps,
    )
    logging.getLogger().info(
        f"Cocycle audit '{mu.name}': max residual {audit.max_residual:.3g} "
        f"vs defect {defect:.3g} over {trials} trials ({rejected} rejected), "
        f"composed word is the product in {audit.identity_rate:.0%}"
    )
    return audit
