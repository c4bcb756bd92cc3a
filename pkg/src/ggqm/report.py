"""Flat rows for estimate tables."""
from __future__ import annotations

from typing import Any

from .estimator import GGEstimate
from .types import EstimateColumn


def estimate_row(estimate: GGEstimate, config_hash: str) -> dict[str, Any]:
    """One CSV row per (kernel, Hamiltonian, p)."""
    return {
        EstimateColumn.KERNEL.value: estimate.kernel,
        EstimateColumn.HAMILTONIAN.value: estimate.hamiltonian,
        EstimateColumn.P.value: estimate.p,
        EstimateColumn.VALUE.value: estimate.value,
        EstimateColumn.STD_ERROR.value: estimate.std_error,
        EstimateColumn.N_SAMPLES.value: estimate.n_samples,
        EstimateColumn.N_REJECTED.value: estimate.n_rejected,
        EstimateColumn.N_UNRESOLVED.value: estimate.n_unresolved,
        EstimateColumn.EXTRAPOLATED.value: estimate.extrapolated,
        EstimateColumn.SEED.value: estimate.seed,
        EstimateColumn.BIAS_BOUND.value: estimate.bias_bound,
        EstimateColumn.WALL_TIME_S.value: estimate.wall_time_s,
        EstimateColumn.CONFIG_HASH.value: config_hash,
    }
