"""Protocol for pipeline step implementations."""
from __future__ import annotations

from typing import Protocol, TypeVar

from .context import PipelineContext

T = TypeVar("T", bound=PipelineContext, contravariant=True)


class PipelineStep(Protocol[T]):
    """Anything with ``run(context)`` can be a step.

    A step reads what earlier steps left in the context and adds its own
    results. It either raises or marks the context failed when it cannot
    continue.
    """

    def run(self, context: T) -> None:
        ...
