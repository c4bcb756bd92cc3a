"""Base context for pipeline execution."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel

from .status import PipelineStatus


class PipelineContext(BaseModel):
    """Status and error message shared by every pipeline context."""

    status: PipelineStatus = PipelineStatus.PENDING
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.status == PipelineStatus.FAILED

    def mark_failed(self, error: str) -> None:
        self.status = PipelineStatus.FAILED
        self.error = error

    def mark_completed(self) -> None:
        self.status = PipelineStatus.COMPLETED

    def mark_running(self) -> None:
        self.status = PipelineStatus.RUNNING
