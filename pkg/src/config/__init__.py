from .calabi import CalabiConfig
from .config import Config
from .estimator import CocycleConfig, EstimatorConfig, ProbeConfig
from .geometry import CurveConfig, FragmentConfig, MoserConfig
from .logging import LoggingConfig
from .numerics import FlowConfig, LoopConfig
from .paths import PathsConfig
from .runtime import RuntimeConfig, RuntimeSettings
from .specs import HamiltonianSpec, KernelSpec, build_kernel
from .types import ExperimentType

__all__ = [
    "CalabiConfig",
    "CocycleConfig",
    "Config",
    "CurveConfig",
    "EstimatorConfig",
    "ExperimentType",
    "FlowConfig",
    "FragmentConfig",
    "HamiltonianSpec",
    "KernelSpec",
    "LoggingConfig",
    "LoopConfig",
    "MoserConfig",
    "PathsConfig",
    "ProbeConfig",
    "RuntimeConfig",
    "RuntimeSettings",
    "build_kernel",
]
