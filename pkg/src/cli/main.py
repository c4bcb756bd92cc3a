#!/usr/bin/env python3
"""Command-line entry point: run, validate, list-presets, list-kernels."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from src.cli.constants import ENUMERATE_START, EXIT_CODE_ERROR, EXIT_CODE_SUCCESS, PROG_NAME
from src.config import ExperimentType
from src.config.constants import CONFIG_SUFFIX
from src.constants import FAIL_MARK, PASS_MARK, SEPARATOR_CHAR, SEPARATOR_LENGTH
from src.errors import QMContinuityError
from src.experiments import load_config, run_experiment, validate_config
from src.fgword import KernelFactory, commutator_value
from src.hamflow import HamiltonianPreset
from src.logger import Logger

PRESETS_DIR = Path(__file__).resolve().parents[2] / "configs"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG_NAME,
        description="Quasi-morphism, Calabi and fragmentation experiments.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run the experiment named in a config file")
    run.add_argument("config", type=Path, help="YAML configuration file")
    run.add_argument("--output", type=Path, default=None, help="Overrides paths.output_dir")

    validate = commands.add_parser("validate", help="Print the diagnostics of a config file")
    validate.add_argument("config", type=Path, help="YAML configuration file")

    commands.add_parser("list-presets", help="List experiments and Hamiltonian presets")
    commands.add_parser("list-kernels", help="List library kernels")
    return parser


def run_command(config_path: Path, output: Optional[Path]) -> int:
    logger = logging.getLogger()
    config = load_config(config_path)
    Logger.setup(config)

    logger.info(SEPARATOR_CHAR * SEPARATOR_LENGTH)
    logger.info(f"Experiment: {config.experiment.value} (seed {config.seed})")
    logger.info(SEPARATOR_CHAR * SEPARATOR_LENGTH)

    report = run_experiment(config, output)

    logger.info("\n" + SEPARATOR_CHAR * SEPARATOR_LENGTH)
    passed = len(report.checks) - len(report.failed_checks)
    logger.info(f"Checks passed: {passed}/{len(report.checks)}")
    for check in report.failed_checks:
        logger.info(f"{FAIL_MARK} {check.name}: {check.detail}")
    logger.info(f"Results: {report.output_dir}")
    logger.info(f"Config hash: {report.provenance.config_hash}")
    logger.info(SEPARATOR_CHAR * SEPARATOR_LENGTH + "\n")

    if not report.passed:
        logger.error(f"{FAIL_MARK} {report.experiment} failed")
        return EXIT_CODE_ERROR
    logger.info(f"{PASS_MARK} {report.experiment} passed")
    return EXIT_CODE_SUCCESS


def validate_command(config_path: Path) -> int:
    logger = logging.getLogger()
    diagnostics = validate_config(config_path)
    if not diagnostics:
        logger.info(f"{PASS_MARK} {config_path} is valid")
        return EXIT_CODE_SUCCESS
    logger.info(f"{FAIL_MARK} {config_path}: {len(diagnostics)} problem(s)")
    for i, diagnostic in enumerate(diagnostics, ENUMERATE_START):
        logger.info(f"  {i}. {diagnostic}")
    return EXIT_CODE_ERROR


def list_presets() -> int:
    logger = logging.getLogger()
    logger.info("Experiments:")
    for experiment in ExperimentType:
        preset = PRESETS_DIR / f"{experiment.value}{CONFIG_SUFFIX}"
        shipped = f"  ({preset.relative_to(PRESETS_DIR.parent)})" if preset.exists() else ""
        logger.info(f"  {experiment.value}{shipped}")
    logger.info("Hamiltonian presets:")
    for preset in HamiltonianPreset:
        logger.info(f"  {preset.value}")
    return EXIT_CODE_SUCCESS


def list_kernels() -> int:
    logger = logging.getLogger()
    logger.info("Library kernels (name, value on [a, b]):")
    for kernel_type in KernelFactory.available():
        mu = KernelFactory.create(kernel_type)
        logger.info(f"  {mu.name:<4} {commutator_value(mu):+g}")
    return EXIT_CODE_SUCCESS


def main(argv: Optional[list[str]] = None) -> int:
    """Parse arguments, run the command and return its exit code."""
    args = build_parser().parse_args(argv)
    Logger.setup()
    logger = logging.getLogger()

    try:
        if args.command == "run":
            return run_command(args.config, args.output)
        if args.command == "validate":
            return validate_command(args.config)
        if args.command == "list-presets":
            return list_presets()
        return list_kernels()
    except (FileNotFoundError, QMContinuityError) as exc:
        logger.error(f"\n{FAIL_MARK} {exc}")
        return EXIT_CODE_ERROR
    except Exception as exc:
        logger.error(f"\n{FAIL_MARK} Unexpected error: {exc}", exc_info=True)
        return EXIT_CODE_ERROR


if __name__ == "__main__":
    sys.exit(main())
