"""Step that probes kernels on disc-supported bumps of growing area."""
from __future__ import annotations

import dataclasses
import logging
from typing import Any

from ...config import Config, ProbeConfig, build_kernel
from ...fgword import CountingQM, commutator_value
from ...ggqm import GGEstimate, gg_estimates, scale_probe
from ...hamflow import Domain, bump, calabi
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep, sampling_kwargs

PROBE_STREAM = 0
SEQUENCE_STREAM = 1


class ContinuityProbeStep(ExperimentStep):
    """Kernels with ``mu([a, b]) = 0`` must vanish on every probed bump;
    the others must match ``2 mu([a, b]) Cal``.

    An optional shrinking sequence of torus bumps with fixed mass shows both
    behaviours side by side.
    """

    name = "continuity-probe"

    def __init__(
        self,
        kernels: list[CountingQM],
        probe: ProbeConfig,
        n_quad: int,
        sampling: dict[str, Any],
    ):
        self.kernels = kernels
        self.probe = probe
        self.n_quad = n_quad
        self.sampling = sampling

    @classmethod
    def from_config(cls, config: Config) -> ContinuityProbeStep:
        return cls(
            kernels=[build_kernel(name, config.kernels) for name in config.probe.kernels],
            probe=config.probe,
            n_quad=config.flow.n_quad,
            sampling=sampling_kwargs(config),
        )

    def _check_estimate(
        self, context: ExperimentContext, label: str, estimate: GGEstimate, target: float
    ) -> bool:
        z = estimate.z_score(target)
        return context.check(
            label,
            abs(z) <= self.probe.error_sigmas,
            f"{estimate.value:.4g} +- {estimate.std_error:.2g} vs {target:.4g} (z={z:.2f})",
        )

    def compute(self, context: ExperimentContext) -> None:
        logger = logging.getLogger()
        for k, mu in enumerate(self.kernels):
            factor = 2.0 * commutator_value(mu)
            probe = scale_probe(
                mu,
                self.probe.areas,
                trials=self.probe.trials,
                seed=context.substream(PROBE_STREAM, k),
                p=self.probe.p,
                n_samples=self.probe.n_samples,
                mass_scale=self.probe.mass_scale,
                extrapolate=self.probe.extrapolate,
                **self.sampling,
            )
            probe = dataclasses.replace(probe, sigmas=self.probe.error_sigmas)

            rows = []
            for row in probe.rows:
                target = factor * row.calabi
                rows.append(
                    {
                        "kernel": mu.name,
                        "area": row.area,
                        "trial": row.trial,
                        "calabi": row.calabi,
                        "value": row.estimate.value,
                        "std_error": row.estimate.std_error,
                        "target": target,
                        "z_score": row.estimate.z_score(target),
                        "n_rejected": row.estimate.n_rejected,
                        "n_unresolved": row.estimate.n_unresolved,
                        "wall_time_s": row.estimate.wall_time_s,
                    }
                )
                label = f"probe[{mu.name}, area={row.area:g}, trial={row.trial}]"
                self._check_estimate(context, label, row.estimate, target)
            context.add_rows("probe", rows)

            scale = probe.estimated_scale
            context.add_rows(
                "scale",
                [{"kernel": mu.name, "commutator_value": factor / 2.0, "estimated_scale": scale}],
            )
            logger.info(f"Kernel '{mu.name}': vanishes up to area {scale}")

        if self.probe.sequence_indices:
            self._shrinking_sequence(context)

    def _shrinking_sequence(self, context: ExperimentContext) -> None:
        rows = []
        for i in self.probe.sequence_indices:
            radius = self.probe.sequence_radius / i
            mass = self.probe.sequence_mass
            F = bump(Domain.torus(), (0.5, 0.5), radius, mass, name=f"shrink_{i}")
            cal = calabi(F, n_quad=self.n_quad)
            estimates = gg_estimates(
                self.kernels,
                F,
                p=self.probe.p,
                n_samples=self.probe.n_samples,
                seed=context.substream(SEQUENCE_STREAM, i),
                extrapolate=self.probe.extrapolate,
                **self.sampling,
            )
            for mu, estimate in zip(self.kernels, estimates):
                target = 2.0 * commutator_value(mu) * cal
                rows.append(
                    {
                        "i": i,
                        "radius": radius,
                        "kernel": mu.name,
                        "calabi": cal,
                        "value": estimate.value,
                        "std_error": estimate.std_error,
                        "target": target,
                        "unresolved_rate": estimate.unresolved_rate,
                        "wall_time_s": estimate.wall_time_s,
                    }
                )
                self._check_estimate(context, f"sequence[{mu.name}, i={i}]", estimate, target)
        context.add_rows("sequence", rows)
