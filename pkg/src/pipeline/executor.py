"""Runs pipeline steps in order over one context."""
from __future__ import annotations

import logging
from typing import Generic, TypeVar

from .context import PipelineContext
from .status import PipelineStatus
from .step import PipelineStep

T = TypeVar("T", bound=PipelineContext)


class PipelineExecutor(Generic[T]):
    """Runs steps in order; stops at the first step that marks the context failed."""

    def __init__(self, steps: list[PipelineStep[T]]):
        """Initialize the pipeline executor.

        Parameters
        ----------
        steps
            Steps to run in order.
        """
        self.steps = steps

    def execute(self, context: T) -> T:
        """Run every step on ``context``.

        Parameters
        ----------
        context
            The initial context to pass through the pipeline.

        Returns
        -------
        The context after the last step, or after the step that failed.

        Raises
        ------
        Exception
            Whatever a step raises, after the context is marked failed.
        """
        logger = logging.getLogger()
        context.mark_running()

        for step in self.steps:
            if context.status == PipelineStatus.FAILED:
                logger.warning(f"Pipeline stopped before {type(step).__name__}: {context.error}")
                break

            logger.debug(f"Running step {type(step).__name__}")
            try:
                step.run(context)
            except Exception as e:
                context.mark_failed(f"{type(step).__name__}: {e}")
                raise

        if context.status == PipelineStatus.RUNNING:
            context.mark_completed()

        return context
