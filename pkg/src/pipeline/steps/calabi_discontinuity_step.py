"""Step that measures Calabi and C0 size along shrinking disc bumps."""
from __future__ import annotations

import logging

from ...config import CalabiConfig, Config, FlowConfig
from ...hamflow import Domain, FlowMap, IntegratorType, bump, c0_distance, calabi
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep


class CalabiDiscontinuityStep(ExperimentStep):
    """Bumps of radius ``1/i`` and fixed mass keep their Calabi invariant while
    their time-1 maps converge to the identity in C0.
    """

    name = "calabi-discontinuity"

    def __init__(self, calabi_config: CalabiConfig, flow: FlowConfig):
        self.calabi_config = calabi_config
        self.flow = flow

    @classmethod
    def from_config(cls, config: Config) -> CalabiDiscontinuityStep:
        return cls(config.calabi, config.flow)

    def compute(self, context: ExperimentContext) -> None:
        logger = logging.getLogger()
        mass, tol = self.calabi_config.mass, self.calabi_config.tolerance

        rows = []
        for i in self.calabi_config.indices:
            radius = 1.0 / i
            F = bump(Domain.disc(), (0.0, 0.0), radius, mass, name=f"bump_{i}")
            f = FlowMap(F, steps=self.flow.steps, method=IntegratorType.EXACT_RADIAL)
            value = calabi(F, n_quad=self.flow.n_quad)
            distance = c0_distance(f, n_c0=self.flow.n_c0)
            rows.append(
                {
                    "i": i,
                    "radius": radius,
                    "calabi": value,
                    "calabi_error": abs(value - mass),
                    "c0_distance": distance,
                    "c0_bound": 2.0 * radius,
                }
            )
            logger.info(f"i={i}: Cal={value:.6f}, d_C0(f, id)={distance:.4g}")

            context.check(
                f"calabi[i={i}]",
                abs(value - mass) <= tol,
                f"|Cal - {mass:g}| = {abs(value - mass):.3g} (tol {tol:g})",
            )
            context.check(
                f"c0_bound[i={i}]",
                distance <= 2.0 * radius,
                f"d_C0 = {distance:.4g} <= {2.0 * radius:.4g}",
            )

        distances = [row["c0_distance"] for row in rows]
        context.check(
            "c0_decreasing",
            all(b < a for a, b in zip(distances, distances[1:])),
            ", ".join(f"{d:.4g}" for d in distances),
        )
        context.add_rows("calabi", rows)
