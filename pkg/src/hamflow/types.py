"""Domain, support, integrator and preset types."""
from enum import Enum


class DomainKind(str, Enum):
    """Phase spaces supported by the flows."""

    TORUS = "torus"
    DISC = "disc"


class SupportKind(str, Enum):
    """Shape of a Hamiltonian's support."""

    FULL = "full"
    DISC = "disc"


class IntegratorType(str, Enum):
    """Time-stepping methods for Hamiltonian flows."""

    MIDPOINT = "midpoint-symplectic"
    RK4_PROJECTED = "rk4-projected"
    EXACT_RADIAL = "exact-radial"


class HamiltonianPreset(str, Enum):
    """Named Hamiltonian families constructible from configuration."""

    ZERO = "zero"
    BUMP = "bump"
    PULSED_BUMP = "pulsed_bump"
    RIGID_ROTATION = "rigid_rotation"
    QUADRATIC = "quadratic"
