"""Fragmentation, Moser and curve extension configuration."""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

from src.moserfrag import BoundaryMode
from src.moserfrag.constants import (
    CURVE_GRID,
    CURVE_INNER,
    CURVE_LIFT,
    DEFAULT_GRID,
    FRAGMENT_DELTA,
    FRAGMENT_GRID,
    FRAGMENT_T_STEPS,
    MIN_GRID,
    MOSER_STEPS,
    TOL_CURVE,
    TOL_FRAG,
    TOL_PULLBACK,
)

from .constants import (
    DEFAULT_CURVE_EPSILONS,
    DEFAULT_CURVE_HARMONICS,
    DEFAULT_CURVE_VERTICES,
    DEFAULT_CURVES,
    DEFAULT_MOSER_AMPLITUDES,
    DEFAULT_MOSER_CASES,
)


class FragmentConfig(BaseSettings):
    """Strip and half-disc decomposition of disc maps."""

    hamiltonians: list[str] = Field(
        default_factory=list,
        description="Names of disc Hamiltonians to fragment; empty means all disc ones",
    )
    epsilon: float = Field(
        default=0.05,
        description="Displacement bound; the strip is |q| < 2 epsilon",
        gt=0,
        lt=0.5,
    )
    grid: int = Field(default=FRAGMENT_GRID, description="Nodes per axis", ge=MIN_GRID)
    delta: float = Field(
        default=FRAGMENT_DELTA,
        description="Length of the dilation ramps of the isotopy",
        gt=0,
        lt=0.5,
    )
    t_steps: int = Field(
        default=FRAGMENT_T_STEPS,
        description="RK4 steps per phase of the strip flow",
        gt=0,
    )
    tolerance: float = Field(
        default=TOL_FRAG,
        description="Largest accepted composition residual",
        gt=0,
    )
    write_grids: bool = Field(default=True, description="Serialize the three factors")


class MoserConfig(BaseSettings):
    """Moser equalization on shrinking shear perturbations of random densities."""

    grid: int = Field(default=DEFAULT_GRID, description="Nodes per axis", ge=MIN_GRID)
    amplitudes: list[float] = Field(
        default=list(DEFAULT_MOSER_AMPLITUDES),
        description="Shear amplitudes, strictly decreasing",
    )
    cases: int = Field(
        default=DEFAULT_MOSER_CASES,
        description="Random base densities",
        gt=0,
    )
    mode: BoundaryMode = Field(
        default=BoundaryMode.VANISH_NEAR_BOUNDARY,
        description="Boundary behaviour of the primitive",
    )
    steps: int = Field(default=MOSER_STEPS, description="RK4 steps of the Moser flow", gt=0)
    tolerance: float = Field(
        default=TOL_PULLBACK,
        description="Largest accepted pullback residual",
        gt=0,
    )
    check_refinement: bool = Field(
        default=True,
        description="Rerun the first case on two successively halved grids and check the order",
    )
    write_grids: bool = Field(default=True, description="Serialize the first Moser map")

    @field_validator("amplitudes")
    @classmethod
    def check_amplitudes(cls, amplitudes: list[float]) -> list[float]:
        if not amplitudes or amplitudes[-1] <= 0:
            raise ValueError(f"amplitudes must be positive, got: {amplitudes}")
        if any(b >= a for a, b in zip(amplitudes, amplitudes[1:])):
            raise ValueError(f"amplitudes must be strictly decreasing, got: {amplitudes}")
        return amplitudes

    @field_validator("mode")
    @classmethod
    def check_mode(cls, mode: BoundaryMode) -> BoundaryMode:
        if mode is BoundaryMode.VANISH_ON_SKELETON:
            raise ValueError("the Moser demo has no skeleton; use free or vanish_near_boundary")
        return mode


class CurveConfig(BaseSettings):
    """Extension of random graph curves near the core circle of the annulus."""

    epsilons: list[float] = Field(
        default=list(DEFAULT_CURVE_EPSILONS),
        description="Band half-widths; each target stays within |y| <= epsilon",
    )
    curves: int = Field(default=DEFAULT_CURVES, description="Random curves per epsilon", gt=0)
    vertices: int = Field(
        default=DEFAULT_CURVE_VERTICES,
        description="Vertices of every target polyline",
        ge=3,
    )
    harmonics: int = Field(
        default=DEFAULT_CURVE_HARMONICS,
        description="Fourier modes of the random height functions",
        gt=0,
    )
    grid: int = Field(default=CURVE_GRID, description="Nodes per axis", ge=MIN_GRID)
    tolerance: float = Field(
        default=TOL_CURVE,
        description="Largest accepted vertex residual",
        gt=0,
    )

    @field_validator("epsilons")
    @classmethod
    def check_epsilons(cls, epsilons: list[float]) -> list[float]:
        limit = CURVE_INNER / (CURVE_LIFT + 1.0)
        outside = [e for e in epsilons if not 0.0 < e < limit]
        if not epsilons or outside:
            raise ValueError(f"epsilons must be non-empty and in (0, {limit:.4g}), got: {epsilons}")
        return epsilons
