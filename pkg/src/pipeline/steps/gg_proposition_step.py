"""Step that compares homogenized estimates with twice the commutator value times Calabi."""
from __future__ import annotations

import logging
from typing import Any

from ...config import Config, EstimatorConfig, build_kernel
from ...fgword import CountingQM, commutator_value
from ...ggqm import (
    GGEstimate,
    estimate_row,
    gg_estimates,
    gg_schedule,
    homogenization_drift,
    richardson,
    shift_invariance,
    subgroup_linearity,
)
from ...hamflow import Hamiltonian, calabi
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep, sampling_kwargs


class GGPropositionStep(ExperimentStep):
    """Estimates every kernel on every Hamiltonian along the p-schedule.

    The paired extrapolation from the last power ``p`` and ``2p``, or the
    plain estimate at ``p`` when extrapolation is off, is checked against
    ``2 mu([a, b]) Cal(F)`` within
    ``max(relative_tolerance |target|, error_sigmas std_error)``.
    """

    name = "gg-proposition"

    def __init__(
        self,
        kernels: list[CountingQM],
        hamiltonians: list[Hamiltonian],
        estimator: EstimatorConfig,
        n_quad: int,
        sampling: dict[str, Any],
    ):
        self.kernels = kernels
        self.hamiltonians = hamiltonians
        self.estimator = estimator
        self.n_quad = n_quad
        self.sampling = sampling

    @classmethod
    def from_config(cls, config: Config) -> GGPropositionStep:
        specs = config.selected_hamiltonians(config.estimator.hamiltonians)
        return cls(
            kernels=[build_kernel(name, config.kernels) for name in config.estimator.kernels],
            hamiltonians=[spec.build() for spec in specs],
            estimator=config.estimator,
            n_quad=config.flow.n_quad,
            sampling=sampling_kwargs(config),
        )

    def _accepts(self, value: float, std_error: float, target: float) -> bool:
        relative = self.estimator.relative_tolerance * abs(target)
        return abs(value - target) <= max(relative, self.estimator.error_sigmas * std_error)

    def compute(self, context: ExperimentContext) -> None:
        logger = logging.getLogger()
        for h, F in enumerate(self.hamiltonians):
            cal = calabi(F, n_quad=self.n_quad)
            logger.info(f"Hamiltonian '{F.name}': Cal = {cal:.6g}")
            table = gg_schedule(
                self.kernels,
                F,
                schedule=self.estimator.p_schedule,
                n_samples=self.estimator.n_samples,
                seed=context.substream(h),
                **self.sampling,
            )
            paired = self._paired(F, context.substream(h))
            if self.estimator.invariance:
                self._invariance(context, F, context.substream(h))

            for mu in self.kernels:
                estimates = table[mu.name]
                checked = paired.get(mu.name, estimates[-1])
                target = 2.0 * commutator_value(mu) * cal
                context.add_rows(
                    "estimates",
                    [
                        {
                            **estimate_row(e, context.config_hash),
                            "calabi": cal,
                            "target": target,
                            "z_score": e.z_score(target),
                        }
                        for e in [*estimates, *([checked] if checked.extrapolated else [])]
                    ],
                )

                extrapolated = richardson(estimates)
                drifts = homogenization_drift(estimates)
                context.add_rows(
                    "drift",
                    [
                        {
                            "kernel": mu.name,
                            "hamiltonian": F.name,
                            "p": d.p,
                            "drift": d.drift,
                            "tolerance": d.tolerance,
                            "within": d.within,
                        }
                        for d in drifts
                    ],
                )
                context.add_rows(
                    "extrapolation",
                    [
                        {
                            "kernel": mu.name,
                            "hamiltonian": F.name,
                            "calabi": cal,
                            "target": target,
                            "last_value": estimates[-1].value,
                            "richardson": extrapolated,
                        }
                    ],
                )

                mode = "extrapolated " if checked.extrapolated else ""
                context.check(
                    f"gg[{mu.name}, {F.name}]",
                    self._accepts(checked.value, checked.std_error, target),
                    f"{mode}p={checked.p}: {checked.value:.5g} +- {checked.std_error:.2g} "
                    f"vs {target:.5g}",
                )

    def _paired(self, hamiltonian: Hamiltonian, seed: int) -> dict[str, GGEstimate]:
        if not self.estimator.extrapolate:
            return {}
        estimates = gg_estimates(
            self.kernels,
            hamiltonian,
            p=self.estimator.p_schedule[-1],
            n_samples=self.estimator.n_samples,
            seed=seed,
            extrapolate=True,
            **self.sampling,
        )
        return {e.kernel: e for e in estimates}

    def _invariance(self, context: ExperimentContext, hamiltonian: Hamiltonian, seed: int) -> None:
        kwargs = {
            "p": self.estimator.p_schedule[-1],
            "n_samples": self.estimator.n_samples,
            "seed": seed,
            "extrapolate": self.estimator.extrapolate,
            **self.sampling,
        }
        rows = shift_invariance(self.kernels, hamiltonian, **kwargs)
        if hamiltonian.time_dependent:
            logging.getLogger().info(f"Skipping linearity for time-dependent '{hamiltonian.name}'")
        else:
            rows += subgroup_linearity(self.kernels, hamiltonian, **kwargs)
        for row in rows:
            context.check(
                f"invariance[{row.kernel}, {hamiltonian.name}, {row.label}]",
                row.within,
                f"{row.value:.5g} vs {row.expected:.5g} (tolerance {row.tolerance:.2g})",
            )
        context.add_rows(
            "invariance",
            [
                {
                    "kernel": row.kernel,
                    "hamiltonian": hamiltonian.name,
                    "label": row.label,
                    "value": row.value,
                    "expected": row.expected,
                    "tolerance": row.tolerance,
                    "within": row.within,
                }
                for row in rows
            ],
        )
