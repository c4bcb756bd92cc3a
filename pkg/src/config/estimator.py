"""Monte-Carlo estimator, scale probe and cocycle audit configuration."""

import math

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

from src.fgword.constants import DEFAULT_DEFECT_BUDGET
from src.ggqm.constants import (
    DEFAULT_N_SAMPLES,
    DEFAULT_P,
    MAX_REJECTION_RATE,
    P_SCHEDULE,
    PROBE_MASS_SCALE,
    PROBE_TRIALS,
)

from .constants import (
    DEFAULT_AUDIT_TRIALS,
    DEFAULT_ERROR_SIGMAS,
    DEFAULT_PROBE_AREAS,
    DEFAULT_PROBE_SAMPLES,
    DEFAULT_RELATIVE_TOLERANCE,
)


def _strictly_increasing(values: list, name: str) -> None:
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} must be strictly increasing, got: {values}")


class EstimatorConfig(BaseSettings):
    """Homogenized estimates of kernels on configured Hamiltonians."""

    kernels: list[str] = Field(
        default=["ab"],
        description="Names of the kernels to estimate",
    )
    hamiltonians: list[str] = Field(
        default_factory=list,
        description="Names of the Hamiltonians to use; empty means all configured ones",
    )
    p_schedule: list[int] = Field(
        default=list(P_SCHEDULE),
        description="Homogenization powers, strictly increasing",
    )
    n_samples: int = Field(
        default=DEFAULT_N_SAMPLES,
        description="Accepted point pairs per estimate",
        gt=0,
    )
    max_rejection_rate: float = Field(
        default=MAX_REJECTION_RATE,
        description="Largest tolerated fraction of rejected pairs",
        ge=0,
        le=1,
    )
    relative_tolerance: float = Field(
        default=DEFAULT_RELATIVE_TOLERANCE,
        description="Relative band around the predicted value",
        ge=0,
    )
    error_sigmas: float = Field(
        default=DEFAULT_ERROR_SIGMAS,
        description="Standard errors always accepted around the predicted value",
        gt=0,
    )
    extrapolate: bool = Field(
        default=True,
        description="Check the paired extrapolation from the last power p and 2p",
    )
    invariance: bool = Field(
        default=False,
        description="Also check torus-shift invariance and linearity on the time-s maps",
    )

    @field_validator("p_schedule")
    @classmethod
    def check_schedule(cls, schedule: list[int]) -> list[int]:
        if not schedule or schedule[0] < 1:
            raise ValueError(f"p_schedule must be non-empty with powers >= 1, got: {schedule}")
        _strictly_increasing(schedule, "p_schedule")
        return schedule


class ProbeConfig(BaseSettings):
    """Kernel estimates on random bumps of increasing support area."""

    kernels: list[str] = Field(
        default=["aab"],
        description="Names of the kernels to probe",
    )
    areas: list[float] = Field(
        default=list(DEFAULT_PROBE_AREAS),
        description="Support areas, strictly increasing, in (0, pi/4)",
    )
    trials: int = Field(
        default=PROBE_TRIALS,
        description="Random bumps per area",
        gt=0,
    )
    mass_scale: float = Field(
        default=PROBE_MASS_SCALE,
        description="Bump mass magnitude relative to its support area",
        gt=0,
    )
    p: int = Field(default=DEFAULT_P, description="Homogenization power", ge=1)
    n_samples: int = Field(
        default=DEFAULT_PROBE_SAMPLES,
        description="Accepted point pairs per estimate",
        gt=0,
    )
    error_sigmas: float = Field(
        default=DEFAULT_ERROR_SIGMAS,
        description="Standard errors within which an estimate counts as zero",
        gt=0,
    )
    extrapolate: bool = Field(
        default=True,
        description="Estimate by the paired extrapolation from p and 2p",
    )
    sequence_indices: list[int] = Field(
        default_factory=list,
        description="Indices i of shrinking torus bumps of radius sequence_radius / i",
    )
    sequence_radius: float = Field(
        default=0.45,
        description="Radius of the first shrinking bump",
        gt=0,
        lt=0.5,
    )
    sequence_mass: float = Field(
        default=1.0,
        description="Mass of every shrinking bump",
    )

    @field_validator("areas")
    @classmethod
    def check_areas(cls, areas: list[float]) -> list[float]:
        if not areas:
            raise ValueError("areas must not be empty")
        outside = [a for a in areas if not 0.0 < a < math.pi / 4]
        if outside:
            raise ValueError(f"areas must lie in (0, pi/4), got: {outside}")
        _strictly_increasing(areas, "areas")
        return areas

    @field_validator("sequence_indices")
    @classmethod
    def check_sequence(cls, indices: list[int]) -> list[int]:
        if indices and indices[0] < 1:
            raise ValueError(f"sequence_indices must be >= 1, got: {indices}")
        _strictly_increasing(indices, "sequence_indices")
        return indices


class CocycleConfig(BaseSettings):
    """Randomized audit of the cocycle relation."""

    kernels: list[str] = Field(
        default=["ab", "aab"],
        description="Names of the kernels to audit",
    )
    trials: int = Field(
        default=DEFAULT_AUDIT_TRIALS,
        description="Random (F, G, x, y) draws per kernel",
        ge=0,
    )
    defect_budget: int = Field(
        default=DEFAULT_DEFECT_BUDGET,
        description="Word pairs searched for the empirical defect",
        gt=0,
    )
