"""Factory for creating experiment steps."""
from __future__ import annotations

from typing import Callable, ClassVar

from ..config import Config, ExperimentType
from .steps import (
    CalabiDiscontinuityStep,
    CocycleAuditStep,
    ContinuityProbeStep,
    CurveStep,
    ExperimentStep,
    FragmentStep,
    GGPropositionStep,
    MoserStep,
)


class ExperimentStepFactory:
    """Factory for creating the computing step of an experiment. Easily extensible."""

    _registry: ClassVar[dict[ExperimentType, Callable[[Config], ExperimentStep]]] = {}

    @classmethod
    def register(cls, experiment_type: ExperimentType):
        """Register a new step builder.

        Parameters
        ----------
        experiment_type
            Experiment to register the builder under.
        """
        def decorator(builder: Callable[[Config], ExperimentStep]):
            cls._registry[experiment_type] = builder
            return builder
        return decorator

    @classmethod
    def create(cls, experiment_type: ExperimentType, config: Config) -> ExperimentStep:
        """Create the step computing an experiment.

        Parameters
        ----------
        experiment_type
            Experiment to run.
        config
            Validated configuration the step reads its sections from.

        Returns
        -------
        ExperimentStep instance.
        """
        if experiment_type not in cls._registry:
            available = ", ".join(t.value for t in cls._registry)
            raise ValueError(
                f"Unknown experiment: {experiment_type}. "
                f"Available experiments: {available}"
            )
        return cls._registry[experiment_type](config)

    @classmethod
    def available(cls) -> list[ExperimentType]:
        return list(cls._registry)


ExperimentStepFactory.register(ExperimentType.CALABI_DISCONTINUITY)(
    CalabiDiscontinuityStep.from_config
)
ExperimentStepFactory.register(ExperimentType.GG_PROPOSITION)(GGPropositionStep.from_config)
ExperimentStepFactory.register(ExperimentType.CONTINUITY_PROBE)(ContinuityProbeStep.from_config)
ExperimentStepFactory.register(ExperimentType.COCYCLE_AUDIT)(CocycleAuditStep.from_config)
ExperimentStepFactory.register(ExperimentType.FRAGMENT_DEMO)(FragmentStep.from_config)
ExperimentStepFactory.register(ExperimentType.MOSER_DEMO)(MoserStep.from_config)
ExperimentStepFactory.register(ExperimentType.CURVE_DEMO)(CurveStep.from_config)
