"""Configuration-driven experiment runs with CSV tables and a text report."""

from .report import Provenance, RunReport, collect_versions
from .runner import run_experiment
from .validation import format_validation_error, load_config, validate_config

__all__ = [
    "Provenance",
    "RunReport",
    "collect_versions",
    "format_validation_error",
    "load_config",
    "run_experiment",
    "validate_config",
]
