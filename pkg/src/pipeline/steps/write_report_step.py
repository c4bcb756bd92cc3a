"""Step that writes the human-readable run report."""
from __future__ import annotations

import logging

from ...constants import (
    ALT_SEPARATOR_CHAR,
    DEFAULT_ENCODING,
    FAIL_MARK,
    PASS_MARK,
    SEPARATOR_CHAR,
    SEPARATOR_LENGTH,
)
from ..constants import REPORT_FILE, TABLE_SUFFIX
from ..contexts.experiment_context import ExperimentContext


def format_report(context: ExperimentContext) -> str:
    """Checks, tables and provenance of a run as plain text."""
    separator = SEPARATOR_CHAR * SEPARATOR_LENGTH
    rule = ALT_SEPARATOR_CHAR * SEPARATOR_LENGTH
    passed = sum(check.passed for check in context.checks)

    lines = [
        separator,
        f"Experiment: {context.experiment}",
        separator,
        f"Config hash: {context.config_hash}",
        f"Seed: {context.config.seed}",
    ]
    lines += [f"{key}: {value}" for key, value in sorted(context.provenance.items())]
    lines += [f"Wall time {name}: {seconds:.2f}s" for name, seconds in context.timings.items()]
    lines += [rule, f"Checks: {passed}/{len(context.checks)} passed"]
    lines += [
        f"{PASS_MARK if check.passed else FAIL_MARK} {check.name}: {check.detail}"
        for check in context.checks
    ]
    lines += [rule, "Tables:"]
    lines += [
        f"  {table}{TABLE_SUFFIX}: {len(rows)} rows" for table, rows in context.tables.items()
    ]
    lines += [rule, f"Result: {'PASSED' if context.passed else 'FAILED'}", separator]
    return "\n".join(lines) + "\n"


class WriteReportStep:
    """Step that writes ``report.txt`` next to the tables."""

    def run(self, context: ExperimentContext) -> None:
        """Write the report.

        Parameters
        ----------
        context
            Experiment context after the experiment and table steps.
        """
        path = context.artifact_path(REPORT_FILE)
        path.write_text(format_report(context), encoding=DEFAULT_ENCODING)
        logging.getLogger().info(f"Report saved to: {path}")
