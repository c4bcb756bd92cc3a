"""Factories for Hamiltonian presets and flow integrators."""
from __future__ import annotations

from typing import Any, Callable, ClassVar

from .integrators import (
    create_exact_radial_integrator,
    create_midpoint_integrator,
    create_rk4_projected_integrator,
)
from .presets import (
    create_bump,
    create_pulsed_bump,
    create_quadratic,
    create_rigid_rotation,
    create_zero,
)
from .protocol import Hamiltonian, Integrator
from .types import HamiltonianPreset, IntegratorType


class HamiltonianFactory:
    """Factory for creating Hamiltonians from named presets. Easily extensible."""

    _registry: ClassVar[dict[HamiltonianPreset, Callable[[dict[str, Any]], Hamiltonian]]] = {}

    @classmethod
    def register(cls, preset: HamiltonianPreset):
        """Register a new Hamiltonian preset.

        Parameters
        ----------
        preset
            Name to register the preset under.
        """
        def decorator(factory_func: Callable[[dict[str, Any]], Hamiltonian]):
            cls._registry[preset] = factory_func
            return factory_func
        return decorator

    @classmethod
    def create(cls, preset: HamiltonianPreset, **kwargs) -> Hamiltonian:
        """Create a Hamiltonian by preset name.

        Parameters
        ----------
        preset
            Name of the preset.
        **kwargs
            Preset parameters (radius, mass, center, omega, domain, name).

        Returns
        -------
        Hamiltonian instance.
        """
        if preset not in cls._registry:
            available = ", ".join(p.value for p in cls._registry)
            raise ValueError(
                f"Unknown Hamiltonian preset: {preset}. "
                f"Available presets: {available}"
            )
        return cls._registry[preset](kwargs)

    @classmethod
    def available(cls) -> list[HamiltonianPreset]:
        return list(cls._registry)


class IntegratorFactory:
    """Factory for creating flow integrators. Easily extensible."""

    _registry: ClassVar[dict[IntegratorType, Callable[[dict[str, Any]], Integrator]]] = {}

    @classmethod
    def register(cls, integrator_type: IntegratorType):
        def decorator(factory_func: Callable[[dict[str, Any]], Integrator]):
            cls._registry[integrator_type] = factory_func
            return factory_func
        return decorator

    @classmethod
    def create(cls, integrator_type: IntegratorType, **kwargs) -> Integrator:
        """Create an integrator by type.

        Parameters
        ----------
        integrator_type
            Type of the integrator to create.
        **kwargs
            Additional arguments passed to the integrator factory.

        Returns
        -------
        Integrator instance.
        """
        if integrator_type not in cls._registry:
            available = ", ".join(t.value for t in cls._registry)
            raise ValueError(
                f"Unknown integrator: {integrator_type}. "
                f"Available integrators: {available}"
            )
        return cls._registry[integrator_type](kwargs)


HamiltonianFactory.register(HamiltonianPreset.ZERO)(create_zero)
HamiltonianFactory.register(HamiltonianPreset.BUMP)(create_bump)
HamiltonianFactory.register(HamiltonianPreset.PULSED_BUMP)(create_pulsed_bump)
HamiltonianFactory.register(HamiltonianPreset.RIGID_ROTATION)(create_rigid_rotation)
HamiltonianFactory.register(HamiltonianPreset.QUADRATIC)(create_quadratic)

IntegratorFactory.register(IntegratorType.MIDPOINT)(create_midpoint_integrator)
IntegratorFactory.register(IntegratorType.RK4_PROJECTED)(create_rk4_projected_integrator)
IntegratorFactory.register(IntegratorType.EXACT_RADIAL)(create_exact_radial_integrator)
