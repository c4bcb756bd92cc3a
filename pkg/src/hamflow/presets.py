"""Named Hamiltonian families, constructible from configuration dictionaries."""
from __future__ import annotations

from typing import Any

from ..errors import UnsupportedDomainError
from .domain import Domain
from .hamiltonian import RadialHamiltonian, ZeroHamiltonian
from .profiles import BumpProfile, ConstantSchedule, PulseSchedule, QuadraticProfile, RigidProfile
from .protocol import Hamiltonian, TimeSchedule
from .types import DomainKind

DEFAULT_CENTER = {DomainKind.TORUS: (0.5, 0.5), DomainKind.DISC: (0.0, 0.0)}


def bump(
    domain: Domain,
    center: tuple[float, float],
    radius: float,
    mass: float,
    schedule: TimeSchedule | None = None,
    name: str = "bump",
) -> RadialHamiltonian:
    """Smooth radial bump supported in ``disc(center, radius)`` with integral ``mass``.

    Raises
    ------
    SupportEscapesDomainError
        If the closed disc does not lie in the interior of the domain.
    """
    domain.check_disc(center, radius)
    return RadialHamiltonian(
        domain=domain,
        center=(float(center[0]), float(center[1])),
        radius=float(radius),
        profile=BumpProfile(radius=float(radius), mass=float(mass)),
        schedule=schedule or ConstantSchedule(),
        name=name,
    )


def _domain(config: dict[str, Any]) -> Domain:
    value = config.get("domain", DomainKind.TORUS)
    if isinstance(value, Domain):
        return value
    try:
        return Domain(DomainKind(value))
    except ValueError as e:
        available = ", ".join(k.value for k in DomainKind)
        raise ValueError(f"Unknown domain: {value}. Available domains: {available}") from e


def _center(config: dict[str, Any], domain: Domain) -> tuple[float, float]:
    center = config.get("center", DEFAULT_CENTER[domain.kind])
    if len(center) != 2:
        raise ValueError(f"center must have two coordinates, got: {center}")
    return float(center[0]), float(center[1])


def _require(config: dict[str, Any], *keys: str) -> None:
    missing = [key for key in keys if key not in config]
    if missing:
        raise ValueError(f"Missing Hamiltonian parameter(s): {', '.join(missing)}")


def create_zero(config: dict[str, Any]) -> Hamiltonian:
    return ZeroHamiltonian(domain=_domain(config), name=config.get("name", "zero"))


def create_bump(config: dict[str, Any]) -> Hamiltonian:
    """Create a time-independent bump.

    Parameters
    ----------
    config
        Configuration dictionary:
        - radius: float - Support radius
        - mass: float - Integral of F over the domain
        - center: [float, float] (optional) - Defaults to the domain center
        - domain: "torus" | "disc" (optional) - Defaults to the torus
        - name: str (optional)
    """
    _require(config, "radius", "mass")
    domain = _domain(config)
    return bump(
        domain,
        _center(config, domain),
        float(config["radius"]),
        float(config["mass"]),
        name=config.get("name", "bump"),
    )


def create_pulsed_bump(config: dict[str, Any]) -> Hamiltonian:
    """Bump times the 1-periodic pulse ``1 - cos(2 pi t)``; same time-1 Calabi as the bump."""
    _require(config, "radius", "mass")
    domain = _domain(config)
    return bump(
        domain,
        _center(config, domain),
        float(config["radius"]),
        float(config["mass"]),
        schedule=PulseSchedule(),
        name=config.get("name", "pulsed_bump"),
    )


def create_rigid_rotation(config: dict[str, Any]) -> Hamiltonian:
    """Rotation by angular velocity ``omega`` on the inner half of a disc, cut off at its radius."""
    _require(config, "radius", "omega")
    domain = _domain(config)
    center = _center(config, domain)
    radius = float(config["radius"])
    domain.check_disc(center, radius)
    return RadialHamiltonian(
        domain=domain,
        center=center,
        radius=radius,
        profile=RigidProfile(radius=radius, omega=float(config["omega"])),
        name=config.get("name", "rigid_rotation"),
    )


def create_quadratic(config: dict[str, Any]) -> Hamiltonian:
    """``(p^2 + q^2)/2`` on the unit disc: unit-speed rigid rotation."""
    domain = _domain({"domain": DomainKind.DISC, **config})
    if domain.is_torus:
        raise UnsupportedDomainError("The quadratic Hamiltonian is only defined on the disc")
    return RadialHamiltonian(
        domain=domain,
        center=(0.0, 0.0),
        radius=None,
        profile=QuadraticProfile(),
        name=config.get("name", "quadratic"),
    )
