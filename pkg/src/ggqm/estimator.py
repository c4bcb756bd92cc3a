"""Monte-Carlo estimation of the homogenized torus quasi-morphism."""
from __future__ import annotations

import logging
import math
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import ExcessiveRejectionError
from ..fgword import CountingQM
from ..hamflow import Hamiltonian
from ..punctured import PathOptions
from .constants import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_N_SAMPLES,
    DEFAULT_P,
    DEFAULT_WORKERS,
    MAX_REJECTION_RATE,
    MAX_SAMPLE_RETRIES,
    WARN_REJECTION_RATE,
)
from .sampling import check_power, evaluate_sample


@dataclass(frozen=True)
class GGEstimate:
    """Sample mean of ``u_{f^p} / p`` over uniform pairs, with its error bars.

    With ``extrapolated`` set, each sample is the paired extrapolation from
    ``p`` and ``2p`` instead.

    ``wall_time_s`` is the only field that varies between identical runs.
    """

    value: float
    std_error: float
    p: int
    n_samples: int
    n_rejected: int
    seed: int
    max_abs: float = 0.0
    kernel: str = ""
    hamiltonian: str = ""
    wall_time_s: float = 0.0
    n_unresolved: int = 0
    extrapolated: bool = False

    @property
    def n_discarded(self) -> int:
        return self.n_rejected + self.n_unresolved

    @property
    def rejection_rate(self) -> float:
        return self.n_rejected / self.n_samples

    @property
    def unresolved_rate(self) -> float:
        return self.n_unresolved / self.n_samples

    @property
    def bias_bound(self) -> float:
        """Mass of discarded draws times the largest sampled ``|u / p|``."""
        return self.n_discarded / (self.n_samples + self.n_discarded) * self.max_abs

    def z_score(self, target: float) -> float:
        """Deviation from ``target`` in standard errors; ``inf`` for a zero-error miss."""
        if self.std_error == 0.0:
            return 0.0 if self.value == target else math.inf
        return (self.value - target) / self.std_error

    def is_zero(self, sigmas: float) -> bool:
        return abs(self.value) <= sigmas * self.std_error


@dataclass(frozen=True)
class SampleChunk:
    """Contiguous range of sample indices evaluated by one worker call."""

    kernels: tuple[CountingQM, ...]
    hamiltonian: Hamiltonian
    p: int
    seed: int
    start: int
    stop: int
    options: PathOptions
    max_retries: int
    extrapolate: bool = False


def evaluate_chunk(chunk: SampleChunk) -> tuple[np.ndarray, int, int]:
    """Per-sample kernel values, shape ``(stop - start, n_kernels)``, and the chunk's
    rejected and unresolved draws.
    """
    values = np.empty((chunk.stop - chunk.start, len(chunk.kernels)))
    rejected = unresolved = 0
    for row, index in enumerate(range(chunk.start, chunk.stop)):
        values[row], misses, failures = evaluate_sample(
            chunk.kernels,
            chunk.hamiltonian,
            chunk.p,
            chunk.seed,
            index,
            chunk.options,
            chunk.max_retries,
            chunk.extrapolate,
        )
        rejected += misses
        unresolved += failures
    logging.getLogger().debug(
        f"Evaluated samples {chunk.start}..{chunk.stop - 1} "
        f"({rejected} rejected, {unresolved} unresolved)"
    )
    return values, rejected, unresolved


def _run_chunks(
    chunks: list[SampleChunk], workers: int
) -> list[tuple[np.ndarray, int, int]]:
    if workers <= 1 or len(chunks) <= 1:
        return [evaluate_chunk(chunk) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=min(workers, len(chunks))) as pool:
        return list(pool.map(evaluate_chunk, chunks))


def gg_estimates(
    kernels: Sequence[CountingQM],
    hamiltonian: Hamiltonian,
    p: int = DEFAULT_P,
    n_samples: int = DEFAULT_N_SAMPLES,
    seed: int = 0,
    options: PathOptions | None = None,
    workers: int = DEFAULT_WORKERS,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    max_rejection_rate: float = MAX_REJECTION_RATE,
    extrapolate: bool = False,
) -> list[GGEstimate]:
    """Estimate several kernels on the same sampled pairs.

    Sample ``i`` draws from its own stream seeded by ``(seed, i)``, and the
    reduction runs in sample order, so the result does not depend on
    ``workers`` or ``chunk_size``.

    Parameters
    ----------
    kernels
        Counting quasi-morphisms to evaluate on each pair word.
    hamiltonian
        Hamiltonian on the torus generating the isotopy.
    p
        Homogenization power; the isotopy is integrated over ``[0, p]``.
    n_samples
        Number of accepted pairs.
    seed
        Master seed.
    options
        Difference-path settings.
    workers
        Process count; 1 evaluates in-process.
    chunk_size
        Samples per worker call.
    max_rejection_rate
        Largest tolerated fraction of discarded draws, rejected near the
        puncture or unresolved, per accepted sample.
    extrapolate
        Evaluate every pair at ``p`` and ``2p`` and average the paired
        extrapolation ``2 v(2p) - v(p)``, which removes the ``O(1 / p)`` bias.

    Returns
    -------
    One ``GGEstimate`` per kernel, in input order.

    Raises
    ------
    ExcessiveRejectionError
        If the discard rate exceeds ``max_rejection_rate``.
    """
    check_power(p)
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got: {n_samples}")
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got: {chunk_size}")
    if not kernels:
        return []
    options = options or PathOptions()
    kernels = tuple(kernels)
    logger = logging.getLogger()
    started = time.perf_counter()

    chunks = [
        SampleChunk(
            kernels=kernels,
            hamiltonian=hamiltonian,
            p=p,
            seed=seed,
            start=start,
            stop=min(start + chunk_size, n_samples),
            options=options,
            max_retries=MAX_SAMPLE_RETRIES,
            extrapolate=extrapolate,
        )
        for start in range(0, n_samples, chunk_size)
    ]
    results = _run_chunks(chunks, workers)
    values = np.concatenate([chunk_values for chunk_values, _, _ in results])
    n_rejected = sum(rejected for _, rejected, _ in results)
    n_unresolved = sum(unresolved for _, _, unresolved in results)
    wall_time = time.perf_counter() - started

    rate = (n_rejected + n_unresolved) / n_samples
    if rate > max_rejection_rate:
        raise ExcessiveRejectionError(
            f"Discard rate {rate:.2%} exceeds {max_rejection_rate:.2%} "
            f"({n_rejected} rejected and {n_unresolved} unresolved for {n_samples} samples)"
        )
    if rate > WARN_REJECTION_RATE:
        logger.warning(f"Discard rate {rate:.2%} for '{hamiltonian.name}' at p={p}")
    if n_unresolved:
        logger.warning(
            f"{n_unresolved} draws on '{hamiltonian.name}' at p={p} exceeded "
            f"{options.max_steps} path samples and were redrawn"
        )

    means = values.mean(axis=0)
    if n_samples > 1:
        errors = values.std(axis=0, ddof=1) / math.sqrt(n_samples)
    else:
        errors = np.zeros(len(kernels))
    extremes = np.abs(values).max(axis=0)

    estimates = [
        GGEstimate(
            value=float(means[k]),
            std_error=float(errors[k]),
            p=p,
            n_samples=n_samples,
            n_rejected=n_rejected,
            seed=seed,
            max_abs=float(extremes[k]),
            kernel=mu.name,
            hamiltonian=hamiltonian.name,
            wall_time_s=wall_time,
            n_unresolved=n_unresolved,
            extrapolated=extrapolate,
        )
        for k, mu in enumerate(kernels)
    ]
    mode = f"p={p}, extrapolated from 2p" if extrapolate else f"p={p}"
    for estimate in estimates:
        logger.info(
            f"{estimate.kernel} on {estimate.hamiltonian} ({mode}): "
            f"{estimate.value:.6g} ± {estimate.std_error:.2g} "
            f"[{n_samples} samples, {n_rejected} rejected, {n_unresolved} unresolved, "
            f"{wall_time:.1f}s]"
        )
    return estimates


def gg_estimate(
    mu: CountingQM,
    hamiltonian: Hamiltonian,
    p: int = DEFAULT_P,
    n_samples: int = DEFAULT_N_SAMPLES,
    seed: int = 0,
    options: PathOptions | None = None,
    workers: int = DEFAULT_WORKERS,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    max_rejection_rate: float = MAX_REJECTION_RATE,
    extrapolate: bool = False,
) -> GGEstimate:
    """Estimate a single kernel; see ``gg_estimates``."""
    (estimate,) = gg_estimates(
        [mu],
        hamiltonian,
        p,
        n_samples,
        seed,
        options,
        workers,
        chunk_size,
        max_rejection_rate,
        extrapolate,
    )
    return estimate
