"""Flow integration and difference-loop configuration."""

from pathlib import Path
from typing import Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings

from src.hamflow import IntegratorType
from src.hamflow.constants import DEFAULT_STEPS, N_C0, N_QUAD, TOL_FLOW
from src.punctured import PathOptions
from src.punctured.constants import (
    BASE_STEPS,
    CHORD_RATIO,
    DELTA_PUNCT,
    H_LOOP,
    MAX_LOOP_STEPS,
)


class FlowConfig(BaseSettings):
    """Flow integration configuration."""

    method: IntegratorType = Field(
        default=IntegratorType.MIDPOINT,
        description="Integrator used for Hamiltonian flows",
    )
    steps: int = Field(
        default=DEFAULT_STEPS,
        description="Time steps per unit time for time-1 maps",
        gt=0,
    )
    tol_flow: float = Field(
        default=TOL_FLOW,
        description="Accuracy expected from the integrator",
        gt=0,
    )
    n_quad: int = Field(
        default=N_QUAD,
        description="Quadrature nodes per axis for Calabi integrals",
        gt=0,
    )
    n_c0: int = Field(
        default=N_C0,
        description="Grid nodes per axis for C0 distances",
        gt=0,
    )


class LoopConfig(BaseSettings):
    """Difference-loop sampling configuration."""

    delta_punct: float = Field(
        default=DELTA_PUNCT,
        description="Smallest allowed distance of a loop to the puncture",
        gt=0,
    )
    h_loop: float = Field(
        default=H_LOOP,
        description="Segment length always accepted by the refinement",
        gt=0,
    )
    chord_ratio: float = Field(
        default=CHORD_RATIO,
        description="Longest segment as a fraction of its distance to the puncture",
        gt=0,
        lt=1,
    )
    base_steps: int = Field(
        default=BASE_STEPS,
        description="Initial samples per unit time",
        gt=0,
    )
    max_steps: int = Field(
        default=MAX_LOOP_STEPS,
        description="Refinement stops with an error beyond this many samples",
        gt=0,
    )

    @model_validator(mode="after")
    def validate_steps(self) -> "LoopConfig":
        if self.base_steps > self.max_steps:
            raise ValueError(
                f"base_steps ({self.base_steps}) must not exceed max_steps ({self.max_steps})"
            )
        return self

    def to_options(self, method: IntegratorType, dump_dir: Optional[Path] = None) -> PathOptions:
        return PathOptions(
            delta_punct=self.delta_punct,
            h_loop=self.h_loop,
            chord_ratio=self.chord_ratio,
            base_steps=self.base_steps,
            max_steps=self.max_steps,
            method=method,
            dump_dir=dump_dir,
        )
