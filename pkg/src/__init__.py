"""
Quasi-morphism continuity toolkit.

Free-group counting quasi-morphisms, Hamiltonian flows on the torus and
the disc, loop words in the punctured torus, the Monte-Carlo estimator
built from them, the Moser and fragmentation constructions, and the
configuration-driven experiment harness.
"""

from .config import Config
from .experiments import RunReport, run_experiment, validate_config
from .fgword import CountingQM, KernelFactory, Word, qm_eval
from .ggqm import GGEstimate, gg_estimate
from .hamflow import FlowMap, HamiltonianFactory, IntegratorFactory, calabi, c0_distance
from .logger import Logger
from .punctured import PuncturedLoop, word_of_loop

__all__ = [
    # Words and quasi-morphisms
    "Word",
    "CountingQM",
    "qm_eval",
    # Flows
    "FlowMap",
    "calabi",
    "c0_distance",
    # Estimator
    "GGEstimate",
    "gg_estimate",
    # Loops
    "PuncturedLoop",
    "word_of_loop",
    # Factories
    "KernelFactory",
    "HamiltonianFactory",
    "IntegratorFactory",
    # Experiments
    "RunReport",
    "run_experiment",
    "validate_config",
    # Config
    "Config",
    # Logger
    "Logger",
]
