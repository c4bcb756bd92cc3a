"""Runs one configured experiment end to end."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from ..config import Config
from ..errors import ConfigInvalidError, ExperimentError, QMContinuityError
from ..pipeline import ExperimentContext, ExperimentStepFactory, PipelineExecutor
from ..pipeline.steps import WriteReportStep, WriteTablesStep
from .report import RunReport, collect_versions


def run_experiment(config: Config, output_dir: Optional[Path] = None) -> RunReport:
    """Run the configured experiment and write its tables and report.

    Parameters
    ----------
    config
        Validated configuration.
    output_dir
        Overrides ``config.paths.output_dir``; results go to
        ``<output_dir>/<experiment>/``.

    Returns
    -------
    RunReport whose ``passed`` is true iff every acceptance check passed.

    Raises
    ------
    ConfigInvalidError
        If a referenced kernel or Hamiltonian does not resolve.
    ExperimentError
        If a module error stops the experiment; the original error is chained.
    """
    errors = config.reference_errors()
    if errors:
        raise ConfigInvalidError(errors)

    experiment = config.experiment.value
    root = Path(output_dir) if output_dir is not None else config.paths.output_dir
    context = ExperimentContext(
        config=config,
        config_hash=config.config_hash(),
        output_dir=root / experiment,
        provenance=collect_versions(),
    )
    logger = logging.getLogger()
    logger.info(f"Experiment {experiment}, config hash {context.config_hash[:12]}")

    try:
        steps = [
            ExperimentStepFactory.create(config.experiment, config),
            WriteTablesStep(),
            WriteReportStep(),
        ]
        PipelineExecutor(steps).execute(context)
    except (QMContinuityError, ValueError) as e:
        raise ExperimentError(experiment, f"{type(e).__name__}: {e}") from e

    if context.failed:
        raise ExperimentError(experiment, context.error or "pipeline failed")
    return RunReport.from_context(context)
