"""Pipeline step implementations, one per experiment plus the output writers."""
from __future__ import annotations

from .calabi_discontinuity_step import CalabiDiscontinuityStep
from .cocycle_audit_step import CocycleAuditStep
from .continuity_probe_step import ContinuityProbeStep
from .curve_step import CurveStep, random_graph_curve
from .experiment_step import ExperimentStep, sampling_kwargs
from .fragment_step import FragmentStep
from .gg_proposition_step import GGPropositionStep
from .moser_step import MoserStep, random_density
from .write_report_step import WriteReportStep, format_report
from .write_tables_step import WriteTablesStep

__all__ = [
    "CalabiDiscontinuityStep",
    "CocycleAuditStep",
    "ContinuityProbeStep",
    "CurveStep",
    "ExperimentStep",
    "FragmentStep",
    "GGPropositionStep",
    "MoserStep",
    "WriteReportStep",
    "WriteTablesStep",
    "format_report",
    "random_density",
    "random_graph_curve",
    "sampling_kwargs",
]
