"""Pipeline infrastructure for executing sequential processing steps."""
from __future__ import annotations

from .context import PipelineContext
from .contexts import Check, ExperimentContext
from .executor import PipelineExecutor
from .factory import ExperimentStepFactory
from .status import PipelineStatus
from .step import PipelineStep

__all__ = [
    "PipelineStep",
    "PipelineExecutor",
    "PipelineContext",
    "PipelineStatus",
    "Check",
    "ExperimentContext",
    "ExperimentStepFactory",
]
