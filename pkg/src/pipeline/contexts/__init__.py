"""Pydantic context models for pipeline state management."""
from __future__ import annotations

from .experiment_context import Check, ExperimentContext

__all__ = [
    "Check",
    "ExperimentContext",
]
