"""Per-pair values of the torus quasi-morphism and seeded pair sampling."""
from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..errors import (
    ExcessiveRejectionError,
    NearPunctureError,
    StepUnderflowError,
    UnsupportedDomainError,
)
from ..fgword import CountingQM, Word, qm_eval
from ..hamflow import Hamiltonian
from ..punctured import PathOptions, pair_word
from .constants import MAX_SAMPLE_RETRIES


def check_power(p: int) -> None:
    if p < 1:
        raise ValueError(f"Homogenization power must be >= 1, got: {p}")


def u_word(
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    p: int = 1,
    options: PathOptions | None = None,
) -> Word:
    """Word of the difference loop of ``(x, y)`` under the ``p``-th iterate of the time-1 map.

    The iterate is realized by integrating the same isotopy over ``[0, p]``.

    Raises
    ------
    UnsupportedDomainError
        If the Hamiltonian does not live on the torus.
    NearPunctureError
        If the difference path touches the puncture; callers resample.
    """
    check_power(p)
    if not hamiltonian.domain.is_torus:
        raise UnsupportedDomainError("Pair words are only defined on the torus")
    return pair_word(hamiltonian, x, y, float(p), options)


def u_value(
    mu: CountingQM,
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    p: int = 1,
    options: PathOptions | None = None,
) -> float:
    """``mu`` evaluated on the pair word; not divided by ``p``."""
    return qm_eval(mu, u_word(hamiltonian, x, y, p, options))


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample ``index``, whatever the worker layout."""
    return np.random.default_rng([seed, index])


def sample_pair(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Two independent uniform points of the torus."""
    points = rng.random((2, 2))
    return points[0], points[1]


def evaluate_sample(
    kernels: Sequence[CountingQM],
    hamiltonian: Hamiltonian,
    p: int,
    seed: int,
    index: int,
    options: PathOptions | None = None,
    max_retries: int = MAX_SAMPLE_RETRIES,
    extrapolate: bool = False,
) -> tuple[np.ndarray, int, int]:
    """Values of one sampled pair for every kernel, with its rejected and unresolved draws.

    The value is ``mu(w_p) / p``, or with ``extrapolate`` the first-order
    extrapolation ``2 mu(w_2p) / 2p - mu(w_p) / p`` on the same pair, which
    cancels the bounded contribution of the loop closure.

    Pairs whose path approaches the puncture, and pairs whose path cannot be
    resolved within ``options.max_steps``, are redrawn from the same stream.
    """
    powers = (p, 2 * p) if extrapolate else (p,)
    rng = sample_stream(seed, index)
    rejected = unresolved = 0
    for _ in range(max_retries + 1):
        x, y = sample_pair(rng)
        if np.array_equal(x, y):
            rejected += 1
            continue
        try:
            words = [u_word(hamiltonian, x, y, k, options) for k in powers]
        except NearPunctureError:
            rejected += 1
            continue
        except StepUnderflowError:
            unresolved += 1
            continue
        values = np.array([[qm_eval(mu, word) for mu in kernels] for word in words])
        if extrapolate:
            return (values[1] - values[0]) / p, rejected, unresolved
        return values[0] / p, rejected, unresolved
    raise ExcessiveRejectionError(
        f"Sample {index} was redrawn {max_retries + 1} times in a row "
        f"({rejected} near the puncture, {unresolved} unresolved)"
    )
