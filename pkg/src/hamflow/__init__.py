"""Hamiltonian flows, the Calabi integral and the C0 metric on the torus and the disc."""

from .calabi import calabi
from .domain import Domain, Support, as_points
from .factory import HamiltonianFactory, IntegratorFactory
from .flow import FlowMap, IdentityMap, Trajectory, flow, integrate, trajectory
from .hamiltonian import (
    ConcatenatedHamiltonian,
    FunctionHamiltonian,
    RadialHamiltonian,
    ZeroHamiltonian,
    sample_domain,
    sgrad,
    vanishes_outside_support,
)
from .metric import area_defect, c0_distance
from .presets import bump
from .profiles import (
    BumpProfile,
    PulseSchedule,
    cutoff,
    cutoff_derivative,
    smooth_step,
    smooth_step_derivative,
)
from .protocol import Hamiltonian, Integrator, PlanarMap
from .types import DomainKind, HamiltonianPreset, IntegratorType, SupportKind

__all__ = [
    "BumpProfile",
    "ConcatenatedHamiltonian",
    "Domain",
    "DomainKind",
    "FlowMap",
    "FunctionHamiltonian",
    "Hamiltonian",
    "HamiltonianFactory",
    "HamiltonianPreset",
    "IdentityMap",
    "Integrator",
    "IntegratorFactory",
    "IntegratorType",
    "PlanarMap",
    "PulseSchedule",
    "RadialHamiltonian",
    "Support",
    "SupportKind",
    "Trajectory",
    "ZeroHamiltonian",
    "area_defect",
    "as_points",
    "bump",
    "c0_distance",
    "calabi",
    "cutoff",
    "cutoff_derivative",
    "flow",
    "integrate",
    "sample_domain",
    "sgrad",
    "smooth_step",
    "smooth_step_derivative",
    "trajectory",
    "vanishes_outside_support",
]
