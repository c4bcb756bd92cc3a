"""Main configuration class combining all sub-configurations."""

import hashlib
import json
from pathlib import Path

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .calabi import CalabiConfig
from .constants import CONFIG_SUFFIX, ENV_PREFIX, UNHASHED_SECTIONS
from .estimator import CocycleConfig, EstimatorConfig, ProbeConfig
from .geometry import CurveConfig, FragmentConfig, MoserConfig
from .logging import LoggingConfig
from .numerics import FlowConfig, LoopConfig
from .paths import PathsConfig
from .runtime import RuntimeConfig
from .specs import LIBRARY_KERNELS, HamiltonianSpec, KernelSpec
from .types import ExperimentType


class Config(BaseSettings):
    """One experiment run: what to compute, with which seed, and where to write it."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX)

    experiment: ExperimentType = Field(description="Experiment to run")
    seed: int = Field(description="Master seed of every random stream", ge=0)
    kernels: list[KernelSpec] = Field(default_factory=list)
    hamiltonians: list[HamiltonianSpec] = Field(default_factory=list)
    flow: FlowConfig = Field(default_factory=FlowConfig)
    loop: LoopConfig = Field(default_factory=LoopConfig)
    estimator: EstimatorConfig = Field(default_factory=EstimatorConfig)
    calabi: CalabiConfig = Field(default_factory=CalabiConfig)
    probe: ProbeConfig = Field(default_factory=ProbeConfig)
    cocycle: CocycleConfig = Field(default_factory=CocycleConfig)
    fragment: FragmentConfig = Field(default_factory=FragmentConfig)
    moser: MoserConfig = Field(default_factory=MoserConfig)
    curve: CurveConfig = Field(default_factory=CurveConfig)
    paths: PathsConfig = Field(default_factory=PathsConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    runtime: RuntimeConfig = Field(default_factory=RuntimeConfig)

    @classmethod
    def from_file(cls, config_path: Path) -> "Config":
        """Load configuration from a YAML file."""
        config_path = Path(config_path).expanduser().resolve()

        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        if config_path.suffix.lower() != CONFIG_SUFFIX:
            raise ValueError(f"Configuration file must be YAML (.yaml), got: {config_path.suffix}")

        with config_path.open() as f:
            data = yaml.safe_load(f) or {}

        return cls(**data)

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON dump, without paths, logging and runtime."""
        data = self.model_dump(mode="json", exclude=set(UNHASHED_SECTIONS))
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def hamiltonian_spec(self, name: str) -> HamiltonianSpec:
        for spec in self.hamiltonians:
            if spec.name == name:
                return spec
        raise ValueError(f"Unknown Hamiltonian: {name}")

    def selected_hamiltonians(self, names: list[str]) -> list[HamiltonianSpec]:
        """Specs named in ``names``, or every configured spec when ``names`` is empty."""
        if not names:
            return list(self.hamiltonians)
        return [self.hamiltonian_spec(name) for name in names]

    def reference_errors(self) -> list[str]:
        """Diagnostics ``"<field path>: <message>"`` for names that do not resolve."""
        errors = []
        for section, specs in (("kernels", self.kernels), ("hamiltonians", self.hamiltonians)):
            seen = set()
            for i, spec in enumerate(specs):
                if spec.name in seen:
                    errors.append(f"{section}.{i}.name: duplicate name '{spec.name}'")
                seen.add(spec.name)

        kernel_names = LIBRARY_KERNELS | {spec.name for spec in self.kernels}
        for section in ("estimator", "probe", "cocycle"):
            for i, name in enumerate(getattr(self, section).kernels):
                if name not in kernel_names:
                    errors.append(f"{section}.kernels.{i}: unknown kernel '{name}'")

        hamiltonian_names = {spec.name for spec in self.hamiltonians}
        for section in ("estimator", "fragment"):
            for i, name in enumerate(getattr(self, section).hamiltonians):
                if name not in hamiltonian_names:
                    errors.append(f"{section}.hamiltonians.{i}: unknown Hamiltonian '{name}'")
        if errors:
            return errors

        if self.experiment is ExperimentType.GG_PROPOSITION:
            for spec in self.selected_hamiltonians(self.estimator.hamiltonians):
                if spec.on_disc:
                    errors.append(
                        f"estimator.hamiltonians: '{spec.name}' lives on the disc, "
                        "the estimator needs torus Hamiltonians"
                    )
            if not self.hamiltonians:
                errors.append("hamiltonians: gg-proposition needs at least one Hamiltonian")
        if self.experiment is ExperimentType.FRAGMENT_DEMO:
            names = self.fragment.hamiltonians
            selected = self.selected_hamiltonians(names)
            if names:
                errors.extend(
                    f"fragment.hamiltonians: '{spec.name}' does not live on the disc"
                    for spec in selected
                    if not spec.on_disc
                )
            elif not any(spec.on_disc for spec in selected):
                errors.append("hamiltonians: fragment-demo needs at least one disc Hamiltonian")
        return errors
