"""Base class for steps that compute one experiment."""
from __future__ import annotations

import logging
import time
from typing import Any, ClassVar

from ...config import Config
from ..contexts.experiment_context import ExperimentContext


class ExperimentStep:
    """Times ``compute`` and logs how many checks it recorded."""

    name: ClassVar[str] = "experiment"

    def run(self, context: ExperimentContext) -> None:
        """Compute the experiment into the context.

        Parameters
        ----------
        context
            Experiment context with config and config hash set.
        """
        logger = logging.getLogger()
        logger.info(f"Running {self.name} (seed {context.config.seed})")

        started = time.perf_counter()
        checks_before = len(context.checks)
        self.compute(context)
        context.timings[self.name] = time.perf_counter() - started

        new_checks = context.checks[checks_before:]
        failed = sum(not check.passed for check in new_checks)
        logger.info(
            f"Finished {self.name} in {context.timings[self.name]:.2f}s: "
            f"{len(new_checks) - failed}/{len(new_checks)} checks passed"
        )

    def compute(self, context: ExperimentContext) -> None:
        raise NotImplementedError


def sampling_kwargs(config: Config) -> dict[str, Any]:
    """Loop options and worker layout shared by every Monte-Carlo estimate."""
    return {
        "options": config.loop.to_options(config.flow.method, config.paths.dump_dir),
        "workers": config.runtime.effective_workers(),
        "chunk_size": config.runtime.chunk_size,
        "max_rejection_rate": config.estimator.max_rejection_rate,
    }
