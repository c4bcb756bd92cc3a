"""Pipeline status enumeration."""
from __future__ import annotations

from enum import Enum


class PipelineStatus(str, Enum):
    """Lifecycle of a pipeline run: pending, running, then completed or failed."""

    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
