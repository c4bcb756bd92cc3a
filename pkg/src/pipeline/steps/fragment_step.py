"""Step that fragments time-1 maps of disc Hamiltonians."""
from __future__ import annotations

import logging

from ...config import Config, FragmentConfig
from ...hamflow import Hamiltonian
from ...moserfrag import disc_fragment, write_grid
from ..constants import GRIDS_DIR
from ..contexts.experiment_context import ExperimentContext
from .experiment_step import ExperimentStep


class FragmentStep(ExperimentStep):
    """``f = theta phi_plus phi_minus`` with exact support checks and a grid residual."""

    name = "fragment-demo"

    def __init__(self, hamiltonians: list[Hamiltonian], fragment: FragmentConfig, flow_steps: int):
        self.hamiltonians = hamiltonians
        self.fragment = fragment
        self.flow_steps = flow_steps

    @classmethod
    def from_config(cls, config: Config) -> FragmentStep:
        specs = config.selected_hamiltonians(config.fragment.hamiltonians)
        return cls(
            hamiltonians=[spec.build() for spec in specs if spec.on_disc],
            fragment=config.fragment,
            flow_steps=config.flow.steps,
        )

    def compute(self, context: ExperimentContext) -> None:
        logger = logging.getLogger()
        cfg = self.fragment
        for F in self.hamiltonians:
            result = disc_fragment(
                F,
                cfg.epsilon,
                n=cfg.grid,
                delta=cfg.delta,
                t_steps=cfg.t_steps,
                flow_steps=self.flow_steps,
            )
            context.add_rows(
                "fragment",
                [
                    {
                        "hamiltonian": F.name,
                        "epsilon": result.epsilon,
                        "kappa": result.kappa,
                        "displacement": result.displacement,
                        "composition_residual": result.composition_residual,
                        "strip_residual": result.strip_residual,
                        "theta_in_strip": result.theta_in_strip,
                        "plus_in_upper": result.plus_in_upper,
                        "minus_in_lower": result.minus_in_lower,
                        "commute_defect": result.commute_defect,
                    }
                ],
            )
            context.check(
                f"fragment[{F.name}]",
                result.passed(cfg.tolerance),
                f"supports {'ok' if result.supports_ok else 'violated'}, "
                f"commute defect {result.commute_defect:g}, "
                f"residual {result.composition_residual:.3g} (tol {cfg.tolerance:g})",
            )

            if cfg.write_grids:
                for label, diffeo in (
                    ("theta", result.theta),
                    ("phi_plus", result.phi_plus),
                    ("phi_minus", result.phi_minus),
                ):
                    path = context.artifact_path(f"{GRIDS_DIR}/{F.name}_{label}.grid")
                    write_grid(diffeo, path)
                logger.info(f"Wrote the factors of '{F.name}' to {path.parent}")
