"""Step that writes every result table as CSV."""
from __future__ import annotations

import csv
import logging

from ...constants import DEFAULT_ENCODING
from ..constants import CONFIG_HASH_COLUMN, TABLE_SUFFIX
from ..contexts.experiment_context import ExperimentContext


class WriteTablesStep:
    """Step that writes ``<table>.csv`` per result table, config hash on every row."""

    def run(self, context: ExperimentContext) -> None:
        """Write the tables to the experiment directory.

        Parameters
        ----------
        context
            Experiment context with tables filled by the experiment step.
        """
        logger = logging.getLogger()
        if not context.tables:
            context.mark_failed("No result tables. The experiment step must run first.")
            return

        for table, rows in context.tables.items():
            for row in rows:
                row[CONFIG_HASH_COLUMN] = context.config_hash
            fields = list(dict.fromkeys(key for row in rows for key in row))

            path = context.artifact_path(f"{table}{TABLE_SUFFIX}")
            with path.open("w", newline="", encoding=DEFAULT_ENCODING) as f:
                writer = csv.DictWriter(f, fieldnames=fields)
                writer.writeheader()
                writer.writerows(rows)
            logger.info(f"Wrote {len(rows)} rows to {path}")
