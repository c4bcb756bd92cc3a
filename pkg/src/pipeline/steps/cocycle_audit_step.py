"""Step that audits the cocycle relation of pair words."""
from __future__ import annotations

from ...config import CocycleConfig, Config, build_kernel
from ...fgword import CountingQM
from ...ggqm import cocycle_audit
from ...ggqm.constants import AUDIT_MIN_IDENTITY_RATE
from ...punctured import PathOptions
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep


class CocycleAuditStep(ExperimentStep):
    """Residuals must stay within the empirical defect.

    The composed isotopy must also read the product word in almost every trial.
    """

    name = "cocycle-audit"

    def __init__(self, kernels: list[CountingQM], cocycle: CocycleConfig, options: PathOptions):
        self.kernels = kernels
        self.cocycle = cocycle
        self.options = options

    @classmethod
    def from_config(cls, config: Config) -> CocycleAuditStep:
        return cls(
            kernels=[build_kernel(name, config.kernels) for name in config.cocycle.kernels],
            cocycle=config.cocycle,
            options=config.loop.to_options(config.flow.method, config.paths.dump_dir),
        )

    def compute(self, context: ExperimentContext) -> None:
        for k, mu in enumerate(self.kernels):
            audit = cocycle_audit(
                mu,
                self.cocycle.trials,
                seed=context.substream(k),
                defect_budget=self.cocycle.defect_budget,
                options=self.options,
            )
            context.add_rows(
                "residuals",
                [
                    {
                        "kernel": mu.name,
                        "trial": i,
                        "residual": float(r),
                        "defect": audit.defect,
                        "product_word": bool(audit.holds[i]),
                        "endpoint_gap": float(audit.endpoint_gaps[i]),
                    }
                    for i, r in enumerate(audit.residuals)
                ],
            )
            context.add_rows(
                "audit",
                [
                    {
                        "kernel": mu.name,
                        "trials": audit.trials,
                        "defect": audit.defect,
                        "max_residual": audit.max_residual,
                        "pass_rate": audit.pass_rate,
                        "identity_rate": audit.identity_rate,
                        "n_rejected": audit.n_rejected,
                    }
                ],
            )
            context.check(
                f"cocycle[{mu.name}]",
                audit.pass_rate == 1.0,
                f"max residual {audit.max_residual:.3g} vs defect {audit.defect:.3g}, "
                f"pass rate {audit.pass_rate:.2%}",
            )
            context.check(
                f"cocycle_identity[{mu.name}]",
                audit.identity_rate >= AUDIT_MIN_IDENTITY_RATE,
                f"composed word is the product in {audit.identity_rate:.2%} of trials",
            )
