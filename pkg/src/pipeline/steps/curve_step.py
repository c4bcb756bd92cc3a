"""Step that extends random graph curves near the core circle to annulus maps."""
from __future__ import annotations

import logging

import numpy as np

from ...config import Config, CurveConfig
from ...moserfrag import curve_extend
from ..constants import CURVE_FILL
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep


def random_graph_curve(
    rng: np.random.Generator, epsilon: float, vertices: int, harmonics: int
) -> np.ndarray:
    """Closed polyline ``(x, g(x))`` with a random trigonometric ``g`` and ``max |g| = 0.8 eps``."""
    x = np.arange(vertices) / vertices
    modes = np.arange(1, harmonics + 1)
    phases = 2.0 * np.pi * np.outer(x, modes)
    a, b = rng.standard_normal((2, harmonics)) / modes
    height = np.cos(phases) @ a + np.sin(phases) @ b
    height *= CURVE_FILL * epsilon / np.max(np.abs(height))
    return np.column_stack([x, height])


class CurveStep(ExperimentStep):
    """Vertex residuals within tolerance; the constant ``C' = |psi| / eps`` is reported."""

    name = "curve-demo"

    def __init__(self, curve: CurveConfig):
        self.curve = curve

    @classmethod
    def from_config(cls, config: Config) -> CurveStep:
        return cls(config.curve)

    def compute(self, context: ExperimentContext) -> None:
        logger = logging.getLogger()
        cfg = self.curve
        summary = []
        for e, epsilon in enumerate(cfg.epsilons):
            rows = []
            for k in range(cfg.curves):
                rng = np.random.default_rng([context.config.seed, e, k])
                target = random_graph_curve(rng, epsilon, cfg.vertices, cfg.harmonics)
                result = curve_extend(target, epsilon, n=cfg.grid)
                lift, move, straighten = result.stage_norms
                rows.append(
                    {
                        "epsilon": epsilon,
                        "curve": k,
                        "markers": len(result.markers),
                        "refinements": result.refinements,
                        "folds": result.folds,
                        "vertex_residual": result.vertex_residual,
                        "grid_residual": result.grid_residual,
                        "lift_norm": lift,
                        "move_norm": move,
                        "straighten_norm": straighten,
                        "c_prime": result.c_prime,
                        "boundary_identity": result.boundary_identity,
                    }
                )

            worst = max(row["vertex_residual"] for row in rows)
            c_prime = max(row["c_prime"] for row in rows)
            context.add_rows("curves", rows)
            summary.append(
                {"epsilon": epsilon, "max_vertex_residual": worst, "max_c_prime": c_prime}
            )
            logger.info(f"eps={epsilon:g}: max residual {worst:.3g}, C' = {c_prime:.3g}")

            context.check(
                f"vertices[eps={epsilon:g}]",
                worst <= cfg.tolerance,
                f"max residual {worst:.3g} (tol {cfg.tolerance:g})",
            )
            context.check(
                f"boundary[eps={epsilon:g}]",
                all(row["boundary_identity"] for row in rows),
                "identity near both boundary circles",
            )

        context.add_rows("curve_summary", summary)
        logger.info(f"C' over the suite: {max(row['max_c_prime'] for row in summary):.3g}")
