"""Calabi discontinuity configuration."""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

from src.hamflow.constants import TOL_QUAD

from .constants import DEFAULT_CALABI_INDICES


class CalabiConfig(BaseSettings):
    """Disc bumps of radius ``1/i`` and fixed mass for the discontinuity sequence."""

    indices: list[int] = Field(
        default=list(DEFAULT_CALABI_INDICES),
        description="Sequence indices i; bump i has radius 1/i",
    )
    mass: float = Field(
        default=1.0,
        description="Mass of every bump, hence its Calabi invariant",
    )
    tolerance: float = Field(
        default=TOL_QUAD,
        description="Allowed deviation of the computed Calabi invariant from the mass",
        gt=0,
    )

    @field_validator("indices")
    @classmethod
    def check_indices(cls, indices: list[int]) -> list[int]:
        if not indices:
            raise ValueError("indices must not be empty")
        if indices[0] < 2 or indices != sorted(set(indices)):
            raise ValueError(f"indices must be strictly increasing and >= 2, got: {indices}")
        return indices
