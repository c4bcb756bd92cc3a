"""Estimator types."""
from enum import Enum


class EstimateColumn(str, Enum):
    """Columns of the per-estimate CSV rows."""

    KERNEL = "kernel"
    HAMILTONIAN = "hamiltonian"
    P = "p"
    VALUE = "value"
    STD_ERROR = "std_error"
    N_SAMPLES = "n_samples"
    N_REJECTED = "n_rejected"
    N_UNRESOLVED = "n_unresolved"
    EXTRAPOLATED = "extrapolated"
    SEED = "seed"
    BIAS_BOUND = "bias_bound"
    WALL_TIME_S = "wall_time_s"
    CONFIG_HASH = "config_hash"
