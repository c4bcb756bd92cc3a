"""Experiment types."""
from enum import Enum


class ExperimentType(str, Enum):
    """Experiments runnable from a configuration file."""

    CALABI_DISCONTINUITY = "calabi-discontinuity"
    GG_PROPOSITION = "gg-proposition"
    CONTINUITY_PROBE = "continuity-probe"
    COCYCLE_AUDIT = "cocycle-audit"
    FRAGMENT_DEMO = "fragment-demo"
    MOSER_DEMO = "moser-demo"
    CURVE_DEMO = "curve-demo"
