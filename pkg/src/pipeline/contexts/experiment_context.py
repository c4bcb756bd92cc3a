"""Context for experiment pipelines."""
from __future__ import annotations

from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel

from ...config import Config
from ..context import PipelineContext


class Check(BaseModel):
    """A named acceptance predicate of an experiment."""

    name: str
    passed: bool
    detail: str = ""


class ExperimentContext(PipelineContext):
    """Context for experiment pipelines.

    Tracks an experiment as it moves through the pipeline:
    Experiment -> Write tables -> Write report
    """

    config: Config
    config_hash: str
    output_dir: Path
    tables: dict[str, list[dict[str, Any]]] = {}
    checks: list[Check] = []
    artifacts: list[Path] = []
    provenance: dict[str, str] = {}
    timings: dict[str, float] = {}

    @property
    def experiment(self) -> str:
        return self.config.experiment.value

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add_rows(self, table: str, rows: list[dict[str, Any]]) -> None:
        self.tables.setdefault(table, []).extend(rows)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        """Record an acceptance predicate and return its outcome."""
        self.checks.append(Check(name=name, passed=bool(passed), detail=detail))
        return bool(passed)

    def substream(self, *keys: int) -> int:
        """Seed of the random stream indexed by ``keys`` under the config seed."""
        sequence = np.random.SeedSequence([self.config.seed, *keys])
        return int(sequence.generate_state(1)[0])

    def artifact_path(self, name: str) -> Path:
        path = self.output_dir / name
        path.parent.mkdir(parents=True, exist_ok=True)
        self.artifacts.append(path)
        return path
