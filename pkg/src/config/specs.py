"""Kernel and Hamiltonian specifications referenced by name from experiment sections."""

from typing import Any, Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings

from src.fgword import CountingQM, KernelFactory, KernelType, create_custom_kernel
from src.fgword.constants import ALPHABET
from src.hamflow import DomainKind, Hamiltonian, HamiltonianFactory, HamiltonianPreset

LIBRARY_KERNELS = frozenset(t.value for t in KernelType)


class KernelSpec(BaseSettings):
    """A counting kernel: a library kernel by name, or explicit weighted terms."""

    name: str = Field(description="Name used to reference the kernel")
    terms: Optional[list[tuple[str, float]]] = Field(
        default=None,
        description="Pattern words in the aAbB alphabet with their weights",
    )
    weight: float = Field(
        default=1.0,
        description="Weight of a library kernel's single pattern",
    )

    @field_validator("terms")
    @classmethod
    def check_alphabet(
        cls, terms: Optional[list[tuple[str, float]]]
    ) -> Optional[list[tuple[str, float]]]:
        if terms is None:
            return terms
        if not terms:
            raise ValueError("terms must not be empty")
        for word, _ in terms:
            foreign = sorted(set(word) - set(ALPHABET))
            if not word or foreign:
                raise ValueError(
                    f"term '{word}' must be a non-empty word in {''.join(ALPHABET)}, "
                    f"found: {foreign}"
                )
        return terms

    @model_validator(mode="after")
    def require_terms_for_custom_kernels(self) -> "KernelSpec":
        if self.terms is None and self.name not in LIBRARY_KERNELS:
            raise ValueError(
                f"Kernel '{self.name}' is not a library kernel and has no terms. "
                f"Library kernels: {', '.join(sorted(LIBRARY_KERNELS))}"
            )
        return self

    def build(self) -> CountingQM:
        if self.terms is None:
            return KernelFactory.create(KernelType(self.name), weight=self.weight)
        return create_custom_kernel(self.name, self.terms)


def build_kernel(name: str, specs: list[KernelSpec]) -> CountingQM:
    """Kernel ``name`` from the configured specs, else from the library."""
    for spec in specs:
        if spec.name == name:
            return spec.build()
    if name in LIBRARY_KERNELS:
        return KernelFactory.create(KernelType(name))
    raise ValueError(f"Unknown kernel: {name}")


class HamiltonianSpec(BaseSettings):
    """A named Hamiltonian preset with its parameters."""

    name: str = Field(description="Name used to reference the Hamiltonian")
    preset: HamiltonianPreset = Field(description="Preset family")
    domain: Optional[DomainKind] = Field(
        default=None,
        description="Phase space; the preset's default when omitted",
    )
    radius: Optional[float] = Field(default=None, description="Support radius", gt=0)
    mass: Optional[float] = Field(default=None, description="Integral of F over the domain")
    center: Optional[tuple[float, float]] = Field(default=None, description="Support center")
    omega: Optional[float] = Field(default=None, description="Angular velocity (rigid rotation)")

    def parameters(self) -> dict[str, Any]:
        values = self.model_dump(exclude={"preset"}, exclude_none=True)
        if self.domain is not None:
            values["domain"] = self.domain.value
        return values

    def build(self) -> Hamiltonian:
        return HamiltonianFactory.create(self.preset, **self.parameters())

    @property
    def on_disc(self) -> bool:
        if self.domain is not None:
            return self.domain is DomainKind.DISC
        return self.preset is HamiltonianPreset.QUADRATIC
