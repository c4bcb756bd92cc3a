"""Monte-Carlo estimation of the torus quasi-morphism built from pair loops."""

from .cocycle import CocycleAudit, CocycleResidual, cocycle_audit, cocycle_residual
from .ensembles import radius_for_area, random_bump
from .estimator import GGEstimate, gg_estimate, gg_estimates
from .homogenize import Drift, gg_schedule, homogenization_drift, richardson
from .invariance import InvarianceRow, shift_invariance, subgroup_linearity
from .probe import ProbeRow, ScaleProbe, scale_probe
from .report import estimate_row
from .sampling import evaluate_sample, sample_pair, sample_stream, u_value, u_word
from .types import EstimateColumn

__all__ = [
    "CocycleAudit",
    "CocycleResidual",
    "Drift",
    "EstimateColumn",
    "GGEstimate",
    "InvarianceRow",
    "ProbeRow",
    "ScaleProbe",
    "cocycle_audit",
    "cocycle_residual",
    "estimate_row",
    "evaluate_sample",
    "gg_estimate",
    "gg_estimates",
    "gg_schedule",
    "homogenization_drift",
    "radius_for_area",
    "random_bump",
    "richardson",
    "sample_pair",
    "sample_stream",
    "scale_probe",
    "shift_invariance",
    "subgroup_linearity",
    "u_value",
    "u_word",
]
