"""Run reports and their provenance."""
from __future__ import annotations

import platform
from importlib import metadata
from pathlib import Path
from typing import Any

import numpy as np
import scipy
from pydantic import BaseModel

from ..constants import PACKAGE_NAME
from ..pipeline import Check, ExperimentContext
from ..pipeline.constants import TIMING_COLUMNS


def package_version() -> str:
    try:
        return metadata.version(PACKAGE_NAME)
    except metadata.PackageNotFoundError:
        return "unknown"


def collect_versions() -> dict[str, str]:
    """Interpreter and library versions recorded with every run."""
    return {
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        PACKAGE_NAME: package_version(),
    }


class Provenance(BaseModel):
    config_hash: str
    versions: dict[str, str]
    wall_times: dict[str, float]


class RunReport(BaseModel):
    """Result rows per table, acceptance checks and provenance of one run."""

    experiment: str
    rows: dict[str, list[dict[str, Any]]]
    checks: list[Check]
    provenance: Provenance
    output_dir: Path
    artifacts: list[Path] = []

    @classmethod
    def from_context(cls, context: ExperimentContext) -> RunReport:
        return cls(
            experiment=context.experiment,
            rows=context.tables,
            checks=context.checks,
            provenance=Provenance(
                config_hash=context.config_hash,
                versions=context.provenance,
                wall_times=context.timings,
            ),
            output_dir=context.output_dir,
            artifacts=context.artifacts,
        )

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def reproducible_rows(self) -> dict[str, list[dict[str, Any]]]:
        """Rows without timing columns; equal across reruns of the same config."""
        return {
            table: [{k: v for k, v in row.items() if k not in TIMING_COLUMNS} for row in rows]
            for table, rows in self.rows.items()
        }
