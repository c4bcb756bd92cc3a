"""Step that equalizes random densities against shrinking shear perturbations."""
from __future__ import annotations

from typing import Callable

import numpy as np

from ...config import Config, MoserConfig
from ...moserfrag import (
    Grid,
    GridForm,
    PerturbationRow,
    export_csv,
    moser_equalize,
    perturbation_suite,
    pushforward_density,
    refinement_study,
    write_grid,
)
from ..constants import DENSITY_COEFFICIENT, DENSITY_MODES, GRIDS_DIR, UNIT_SQUARE
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep


def random_density(rng: np.random.Generator) -> Callable[[np.ndarray], np.ndarray]:
    """``1 + sum a_kl sin(k pi x) sin(l pi y)`` on the unit square, bounded below by 1/2."""
    modes = np.arange(1, DENSITY_MODES + 1)
    coefficients = rng.uniform(-DENSITY_COEFFICIENT, DENSITY_COEFFICIENT, (len(modes), len(modes)))

    def density(points: np.ndarray) -> np.ndarray:
        sx = np.sin(np.pi * np.outer(points[:, 0], modes))
        sy = np.sin(np.pi * np.outer(points[:, 1], modes))
        return 1.0 + np.einsum("nk,kl,nl->n", sx, coefficients, sy)

    return density


class MoserStep(ExperimentStep):
    """Pullback residuals within tolerance and C0 norms shrinking with the perturbation."""

    name = "moser-demo"

    def __init__(self, moser: MoserConfig):
        self.moser = moser

    @classmethod
    def from_config(cls, config: Config) -> MoserStep:
        return cls(config.moser)

    def _suite(self, omega: GridForm, amplitudes: list[float]) -> list[PerturbationRow]:
        return perturbation_suite(omega, amplitudes, mode=self.moser.mode, steps=self.moser.steps)

    def compute(self, context: ExperimentContext) -> None:
        cfg = self.moser
        grid = Grid.rectangle(UNIT_SQUARE, cfg.grid)
        densities = [
            random_density(np.random.default_rng([context.config.seed, case]))
            for case in range(cfg.cases)
        ]

        for case, density in enumerate(densities):
            rows = self._suite(GridForm.from_function(grid, density), cfg.amplitudes)
            context.add_rows(
                "moser",
                [
                    {
                        "case": case,
                        "amplitude": row.amplitude,
                        "ratio_deviation": row.ratio_deviation,
                        "c0_norm": row.c0_norm,
                        "pullback_residual": row.pullback_residual,
                    }
                    for row in rows
                ],
            )
            worst = max(row.pullback_residual for row in rows)
            norms = [row.c0_norm for row in rows]
            context.check(
                f"pullback[case={case}]",
                worst <= cfg.tolerance,
                f"max residual {worst:.3g} (tol {cfg.tolerance:g})",
            )
            context.check(
                f"c0_shrinks[case={case}]",
                all(b < a for a, b in zip(norms, norms[1:])),
                ", ".join(f"{n:.3g}" for n in norms),
            )

        if cfg.check_refinement:
            self._refinement(context, densities[0], grid)
        if cfg.write_grids:
            self._write_first_map(context, GridForm.from_function(grid, densities[0]))

    def _refinement(
        self, context: ExperimentContext, density: Callable[[np.ndarray], np.ndarray], grid: Grid
    ) -> None:
        """Residual of the first case and amplitude on the grid and two successive doublings."""
        amplitude = self.moser.amplitudes[0]
        sizes = [grid.nx, 2 * grid.nx - 1, 4 * grid.nx - 3]
        rows = refinement_study(
            density, UNIT_SQUARE, sizes, amplitude, mode=self.moser.mode, steps=self.moser.steps
        )
        context.add_rows(
            "refinement",
            [
                {
                    "grid": row.nx,
                    "amplitude": amplitude,
                    "pullback_residual": row.pullback_residual,
                    "order": row.order,
                }
                for row in rows
            ],
        )
        for row in rows[1:]:
            context.check(
                f"refinement[{row.nx}]",
                row.converging,
                f"residual {row.pullback_residual:.3g}, observed order {row.order:.2f}",
            )

    def _write_first_map(self, context: ExperimentContext, omega: GridForm) -> None:
        target = pushforward_density(omega, self.moser.amplitudes[0])
        f = moser_equalize(omega, target, self.moser.mode, steps=self.moser.steps)
        write_grid(omega, context.artifact_path(f"{GRIDS_DIR}/omega_case0.grid"))
        write_grid(f, context.artifact_path(f"{GRIDS_DIR}/moser_case0.grid"))
        export_csv(f, context.artifact_path(f"{GRIDS_DIR}/moser_case0.csv"))
